#include "kanex/shapes.hpp"

#include <algorithm>
#include <stdexcept>

namespace kanex {

namespace {

bool componentwise_leq(const Label& a, const Label& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("label arity mismatch");
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] > b.c[i]) return false;
  return true;
}

FinPoset componentwise(std::vector<Label> objs) {
  return FinPoset::make(std::move(objs), componentwise_leq);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Label stair_lower(int x) { return x == 0 ? Label::of(0, 0) : Label::of(x, x - 1); }
Label stair_upper(int x) { return Label::of(x - 1, x); }
Label stair_top(int n, bool generic) {
  if (n == 3 && !generic) return Label::of(2, 1);
  return Label::of(n - 2, n - 2);
}
Label stair_interior() { return Label::of(1, 1); }

static FinPoset a_tilde_impl(int n, bool generic) {
  require(n >= 3, "A_tilde(n,2) needs n >= 3");
  std::vector<Label> objs;
  objs.push_back(stair_lower(0));
  for (int x = 1; x <= n - 2; ++x) objs.push_back(stair_lower(x));
  for (int x = 1; x <= n - 2; ++x) objs.push_back(stair_upper(x));
  const Label top = stair_top(n, generic);
  if (std::find(objs.begin(), objs.end(), top) == objs.end()) objs.push_back(top);
  return componentwise(std::move(objs));
}

FinPoset a_tilde(int n) { return a_tilde_impl(n, false); }
FinPoset a_tilde_generic(int n) { return a_tilde_impl(n, true); }

FinPoset k2_shape(int n, int m) {
  require(n >= 3 && m >= 2 && m <= 4, "k2_shape: invalid parameters");
  std::vector<Label> objs;
  if (m <= 2) objs.push_back(stair_lower(0));
  for (int x = 1; x <= n - 2; ++x) objs.push_back(stair_lower(x));
  objs.push_back(stair_interior());
  for (int x = (m == 4 ? 2 : 1); x <= n - 2; ++x) objs.push_back(stair_upper(x));
  const Label top = stair_top(n, false);
  if (std::find(objs.begin(), objs.end(), top) == objs.end()) objs.push_back(top);
  return componentwise(std::move(objs));
}

FinPoset a_n_poset(int n) {
  require(n >= 1, "A_n needs n >= 1");
  std::vector<Label> objs;
  for (int i = 1; i <= n; ++i) objs.push_back(Label::of(i));
  return FinPoset::make(std::move(objs), [](const Label& a, const Label& b) { return a.c[0] <= b.c[0]; });
}

bool k_shape_valid(int n, int l, int m) {
  if (n < 3 || l < 1 || l > n - 2) return false;
  if (l == 1) return m >= 1 && m <= 4;
  return m >= 1 && m <= 5;
}

FinPoset k_shape(int n, int l, int m) {
  require(k_shape_valid(n, l, m), "invalid K(n,l,m) combination");
  if (l == 1) {
    if (m == 1) return a_tilde(n);
    if (n == 3 && m == 4) return a_n_poset(3);
    return k2_shape(n, m);
  }
  const int nn = n - l + 1;
  const FinPoset base = (m == 1) ? a_tilde_generic(nn) : k2_shape(nn, std::min(m, 4));
  FinPoset prod = product(base, interval(l - 1));
  if (m < 5) return prod;
  std::vector<int> keep;
  for (int i = 0; i < prod.size(); ++i) {
    const Label& lab = prod.label(i);
    if (lab.c[0] == 1 && lab.c[1] == 0 && lab.c[2] >= 1) continue;
    keep.push_back(i);
  }
  return full_subposet(prod, keep).poset;
}

FinPoset mesh_window(int n, int kmin, int kmax) {
  require(n >= 1 && kmin <= 0 && 0 <= kmax, "mesh_window needs n >= 1 and kmin <= 0 <= kmax");
  std::vector<Label> objs;
  for (int k = kmin; k <= kmax; ++k)
    for (int l = 0; l <= n + 1; ++l) objs.push_back(Label::of(k, l));
  return FinPoset::make(std::move(objs), [](const Label& a, const Label& b) {
    return a.c[0] <= b.c[0] && a.c[0] + a.c[1] <= b.c[0] + b.c[1];
  });
}

FinPoset b_tilde() {
  std::vector<Label> objs = {Label::of(0), Label::of(1), Label::of(2), Label::of(3)};
  return FinPoset::make(std::move(objs), [](const Label& a, const Label& b) {
    if (a == b) return true;
    const bool a_src = a.c[0] == 0 || a.c[0] == 1;
    const bool b_snk = b.c[0] == 2 || b.c[0] == 3;
    return a_src && b_snk;
  });
}

FinPoset b_collapsed() {
  std::vector<Label> objs = {Label::of(1), Label::of(0), Label::of(3)};  // b < a~c < d
  return FinPoset::make(std::move(objs), [](const Label& a, const Label& b) {
    auto rank = [](const Label& l) { return l.c[0] == 1 ? 0 : (l.c[0] == 0 ? 1 : 2); };
    return rank(a) <= rank(b);
  });
}

FinPoset ch_poset(int n) {
  require(n >= 2 && n <= 4, "ch_poset(n) is representable as a poset only for n <= 4");
  std::vector<Label> objs;
  for (int k = n - 1; k >= 0; --k) objs.push_back(Label::of(k));
  objs.push_back(Label::point());
  return FinPoset::make(std::move(objs), [](const Label& a, const Label& b) {
    if (a == b) return true;
    if (!a.pt && !b.pt) return a.c[0] >= b.c[0];
    if (!a.pt && b.pt) return a.c[0] >= 2;
    if (a.pt && !b.pt) return b.c[0] <= 1;
    return true;
  });
}

MonotoneMap conn_i(int n, int l, int m) {
  require(k_shape_valid(n, l, m) && m >= 1, "invalid i^n_{l,m} indices");
  if (l == 1) {
    switch (m) {
      case 1: {  // A~(n,2) -> K~(n,1,2), inclusion of the target square
        FinPoset src = a_tilde(n), tgt = k_shape(n, 1, 2);
        return MonotoneMap::make(src, tgt, [](const Label& a) { return a; });
      }
      case 2: {  // K~(n,1,3) -> K~(n,1,2)
        FinPoset src = k_shape(n, 1, 3), tgt = k_shape(n, 1, 2);
        return MonotoneMap::make(src, tgt, [](const Label& a) { return a; });
      }
      case 3: {  // K~(n,1,4) -> K~(n,1,3); for n = 3 the source is A_3
        FinPoset src = k_shape(n, 1, 4), tgt = k_shape(n, 1, 3);
        if (n == 3) {
          return MonotoneMap::make(src, tgt, [](const Label& a) {
            switch (a.c[0]) {
              case 1: return Label::of(1, 0);
              case 2: return Label::of(1, 1);
              default: return Label::of(2, 1);
            }
          });
        }
        return MonotoneMap::make(src, tgt, [](const Label& a) { return a; });
      }
      case 4: {  // the epimorphism K~(n,2,1) -> K~(n,1,4), (x,y,z) -> (x+1,y+1)
        require(n >= 4, "i^n_{1,4} needs n >= 4");
        FinPoset src = k_shape(n, 2, 1), tgt = k_shape(n, 1, 4);
        return MonotoneMap::make(src, tgt, [](const Label& a) {
          if (a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0) return Label::of(1, 0);
          return Label::of(a.c[0] + 1, a.c[1] + 1);
        });
      }
    }
  }
  const int nn = n - l + 1;
  switch (m) {
    case 1: {  // (i^nn_{1,1} x id): A~(nn,2)-generic x [l-1] -> K~(nn,1,2) x [l-1]
      FinPoset src = k_shape(n, l, 1), tgt = k_shape(n, l, 2);
      const Label gtop = stair_top(nn, true), ttop = stair_top(nn, false);
      return MonotoneMap::make(src, tgt, [gtop, ttop](const Label& a) {
        Label b = a;
        if (b.c[0] == gtop.c[0] && b.c[1] == gtop.c[1]) {
          b.c[0] = ttop.c[0];
          b.c[1] = ttop.c[1];
        }
        return b;
      });
    }
    case 2: {
      FinPoset src = k_shape(n, l, 3), tgt = k_shape(n, l, 2);
      return MonotoneMap::make(src, tgt, [](const Label& a) { return a; });
    }
    case 3: {
      FinPoset src = k_shape(n, l, 4), tgt = k_shape(n, l, 3);
      return MonotoneMap::make(src, tgt, [](const Label& a) { return a; });
    }
    case 4: {  // collapse of the (1,0)-column: K~(n,l,4) -> K~(n,l,5)
      FinPoset src = k_shape(n, l, 4), tgt = k_shape(n, l, 5);
      return MonotoneMap::make(src, tgt, [](const Label& a) {
        if (a.c[0] == 1 && a.c[1] == 0) return Label::of(1, 0, 0);
        return a;
      });
    }
    case 5: {
      if (l == n - 2) {  // K~(n,n-2,5) -> A_n
        FinPoset src = k_shape(n, n - 2, 5), tgt = a_n_poset(n);
        return MonotoneMap::make(src, tgt, [n](const Label& a) {
          if (a.c[0] == 1 && a.c[1] == 1) return Label::of(a.c[2] + 2);
          if (a.c[0] == 1 && a.c[1] == 0) return Label::of(1);
          return Label::of(n);
        });
      }
      // K~(n,l+1,1) -> K~(n,l,5)
      FinPoset src = k_shape(n, l + 1, 1), tgt = k_shape(n, l, 5);
      return MonotoneMap::make(src, tgt, [](const Label& a) {
        if (a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0) return Label::of(1, 0, 0);
        return Label::of(a.c[0] + 1, a.c[1] + 1, std::max(a.c[2] - 1, 0));
      });
    }
  }
  throw std::invalid_argument("invalid i^n_{l,m} indices");
}

MonotoneMap conn_j(int n, int kmin, int kmax) {
  require(n >= 3, "j^n needs n >= 3");
  FinPoset src = a_tilde(n), tgt = mesh_window(n, kmin, kmax);
  auto image = [n](const Label& a) -> Label {
    const Label top = stair_top(n, false);
    if (a == top) return Label::of(0, n);
    if (a.c[0] == 0 && a.c[1] == 0) {
      if (n % 2 == 0) return Label::of(-((n - 2) / 2) * (n - 1), 1);
      return Label::of(((-n + 1) / 2) * (n - 1), n);
    }
    if (a.c[0] == a.c[1] + 1) {  // lower diagonal (p, p-1)
      const int p = a.c[0];
      if (n % 2 == 0) {
        if (p % 2 == 1) return Label::of(((-n + p + 1) / 2) * (n - 1), n);
        return Label::of(((-n + p + 2) / 2) * (n - 1), 1);
      }
      if (p % 2 == 1) return Label::of(((-n + p + 2) / 2) * (n - 1), 1);
      return Label::of(((-n + p + 1) / 2) * (n - 1), n);
    }
    // upper diagonal (p-1, p)
    const int p = a.c[1];
    if (n % 2 == 0) {
      if (p % 2 == 1) return Label::of(((-n + p + 1) / 2) * (n - 1) + 1, 0);
      return Label::of(((-n + p) / 2) * (n - 1) + 1, n + 1);
    }
    if (p % 2 == 1) return Label::of(((-n + p) / 2) * (n - 1), n + 1);
    return Label::of(((-n + p + 1) / 2) * (n - 1) + 2, 0);
  };
  for (const auto& a : src.objects()) {
    const Label im = image(a);
    if (!tgt.contains(im))
      throw std::invalid_argument("window too small: j^" + std::to_string(n) + " needs " + im.str());
  }
  return MonotoneMap::make(src, tgt, image);
}

MonotoneMap conn_i_mesh(int n, int kmin, int kmax) {
  FinPoset src = a_n_poset(n), tgt = mesh_window(n, kmin, kmax);
  return MonotoneMap::make(src, tgt, [](const Label& a) { return Label::of(0, a.c[0]); });
}

MonotoneMap conn_u_map(int n) {
  require(n >= 3 && n <= 4, "u_n is representable as a poset map only for n <= 4");
  FinPoset src = a_tilde(n), tgt = ch_poset(n);
  const Label top = stair_top(n, false);
  return MonotoneMap::make(src, tgt, [n, top](const Label& a) {
    if (a == top) return Label::of(0);
    if (a.c[0] == 0 && a.c[1] == 0) return Label::of(n - 1);
    if (a.c[0] == a.c[1] + 1) return Label::of(n - a.c[0] - 1);  // (i+1,i) -> n-i-2
    return Label::point();
  });
}

MonotoneMap conn_f(int n, int kmin, int kmax) {
  FinPoset src = mesh_window(n, kmin, kmax), tgt = mesh_window(n, kmin, kmax + n + 1);
  return MonotoneMap::make(src, tgt,
                           [n](const Label& a) { return Label::of(a.c[0] + a.c[1], n + 1 - a.c[1]); });
}

MonotoneMap conn_t(int n, int kmin, int kmax) {
  FinPoset src = mesh_window(n, kmin, kmax), tgt = mesh_window(n, kmin - 1, kmax - 1);
  return MonotoneMap::make(src, tgt, [](const Label& a) { return Label::of(a.c[0] - 1, a.c[1]); });
}

MonotoneMap conn_collapse_v() {
  FinPoset src = b_tilde(), tgt = b_collapsed();
  return MonotoneMap::make(src, tgt, [](const Label& a) {
    if (a.c[0] == 2) return Label::of(0);
    return a;
  });
}

FinPoset shape_by_name(const std::string& name) {
  auto args_of = [&](const std::string& head) -> std::vector<int> {
    if (name.rfind(head + "(", 0) != 0 || name.back() != ')') return {};
    std::string body = name.substr(head.size() + 1, name.size() - head.size() - 2);
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      out.push_back(std::stoi(body.substr(pos, comma - pos)));
      pos = comma + 1;
      if (pos > body.size()) break;
    }
    return out;
  };
  if (name == "square") return product(interval(1), interval(1));
  if (name == "B_tilde") return b_tilde();
  if (name == "B_collapsed") return b_collapsed();
  if (auto a = args_of("A_tilde"); a.size() == 2 && a[1] == 2) return a_tilde(a[0]);
  if (auto a = args_of("K"); a.size() == 3) return k_shape(a[0], a[1], a[2]);
  if (auto a = args_of("A_n"); a.size() == 1) return a_n_poset(a[0]);
  if (auto a = args_of("interval"); a.size() == 1) return interval(a[0]);
  if (auto a = args_of("mesh_window"); a.size() == 3) return mesh_window(a[0], a[1], a[2]);
  if (auto a = args_of("ch"); a.size() == 1) return ch_poset(a[0]);
  throw std::invalid_argument("unknown shape name: " + name);
}

}  // namespace kanex
