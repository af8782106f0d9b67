#include "kanex/jsonio.hpp"

#include <stdexcept>

namespace kanex {

namespace {

Json matrix_entries(const Matrix& m) {
  Json arr = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.field().is_rational()) {
        const Rational v = m.get_rational(i, j);
        if (boost::multiprecision::denominator(v) == 1 &&
            boost::multiprecision::numerator(v) >= std::numeric_limits<long long>::min() &&
            boost::multiprecision::numerator(v) <= std::numeric_limits<long long>::max())
          arr.push_back(static_cast<long long>(boost::multiprecision::numerator(v)));
        else
          arr.push_back(v.str());
      } else {
        arr.push_back(std::stoll(m.entry_string(i, j)));
      }
    }
  return arr;
}

Matrix matrix_from_entries(const Json& arr, FieldSpec f, int rows, int cols) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != rows * cols)
    throw std::invalid_argument("matrix entry array has the wrong length");
  Matrix m(f, rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j, ++k) {
      const Json& e = arr[k];
      if (e.is_number_integer())
        m.set(i, j, e.get<long long>());
      else if (e.is_string())
        m.set_parsed(i, j, e.get<std::string>());
      else
        throw std::invalid_argument("matrix entries must be integers or 'a/b' strings");
    }
  return m;
}

}  // namespace

Json complex_to_json(const ChainComplex& c) {
  Json j;
  if (c.lo() > c.hi()) {
    j["range"] = Json::array({0, -1});
    j["dims"] = Json::array();
    j["d"] = Json::object();
    return j;
  }
  j["range"] = Json::array({c.lo(), c.hi()});
  Json dims = Json::array();
  for (int n = c.lo(); n <= c.hi(); ++n) dims.push_back(c.dim(n));
  j["dims"] = std::move(dims);
  Json d = Json::object();
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    const Matrix m = c.d(n);
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
    d[std::to_string(n)] = matrix_entries(m);
  }
  j["d"] = std::move(d);
  return j;
}

ChainComplex complex_from_json(const Json& j, FieldSpec f) {
  if (!j.contains("range") || !j.contains("dims"))
    throw std::invalid_argument("complex document needs range and dims");
  const int lo = j["range"][0].get<int>();
  const int hi = j["range"][1].get<int>();
  std::vector<int> dims;
  for (const auto& d : j["dims"]) dims.push_back(d.get<int>());
  if (hi - lo + 1 != static_cast<int>(dims.size()) && !(hi < lo && dims.empty()))
    throw std::invalid_argument("complex dims length does not match range");
  auto dim_at = [&](int n) {
    return (n < lo || n > hi) ? 0 : dims[n - lo];
  };
  std::map<int, Matrix> diffs;
  if (j.contains("d"))
    for (const auto& [key, val] : j["d"].items()) {
      const int n = std::stoi(key);
      diffs.emplace(n, matrix_from_entries(val, f, dim_at(n - 1), dim_at(n)));
    }
  return ChainComplex(f, lo, dims, std::move(diffs));
}

Json diagram_to_json(const Diagram& x, const std::string& shape_name) {
  Json j;
  j["field"] = x.field().characteristic;
  if (!shape_name.empty()) {
    j["shape"] = shape_name;
  } else {
    Json sh;
    Json objs = Json::array();
    for (const auto& l : x.shape().objects()) objs.push_back(l.str());
    sh["objects"] = std::move(objs);
    Json covers = Json::array();
    for (const auto& [a, b] : x.shape().covers())
      covers.push_back(Json::array({x.shape().label(a).str(), x.shape().label(b).str()}));
    sh["covers"] = std::move(covers);
    j["shape"] = std::move(sh);
  }
  Json comp = Json::object();
  for (int i = 0; i < x.shape().size(); ++i)
    comp[x.shape().label(i).str()] = complex_to_json(x.at(i));
  j["complexes"] = std::move(comp);
  Json arrows = Json::object();
  for (const auto& [a, b] : x.shape().covers()) {
    const ChainMap m = x.arrow(a, b);
    Json entry = Json::object();
    for (int n = std::max(m.source().lo(), m.target().lo());
         n <= std::min(m.source().hi(), m.target().hi()); ++n) {
      const Matrix c = m.component(n);
      if (c.rows() == 0 || c.cols() == 0 || c.is_zero()) continue;
      entry[std::to_string(n)] = matrix_entries(c);
    }
    arrows[x.shape().label(a).str() + "->" + x.shape().label(b).str()] = std::move(entry);
  }
  j["arrows"] = std::move(arrows);
  return j;
}

Diagram diagram_from_json(const Json& j) {
  if (!j.contains("field") || !j.contains("shape") || !j.contains("complexes"))
    throw std::invalid_argument("diagram document needs field, shape and complexes");
  const FieldSpec f = make_field(j["field"].get<std::uint32_t>());
  FinPoset shape;
  if (j["shape"].is_string()) {
    shape = shape_by_name(j["shape"].get<std::string>());
  } else {
    std::vector<Label> objs;
    for (const auto& o : j["shape"]["objects"]) objs.push_back(parse_label(o.get<std::string>()));
    // order = reflexive-transitive closure of the covering relation
    const int nn = static_cast<int>(objs.size());
    std::vector<std::vector<bool>> leq(nn, std::vector<bool>(nn, false));
    for (int i = 0; i < nn; ++i) leq[i][i] = true;
    std::map<Label, int> idx;
    for (int i = 0; i < nn; ++i) idx[objs[i]] = i;
    for (const auto& c : j["shape"]["covers"]) {
      const Label a = parse_label(c[0].get<std::string>());
      const Label b = parse_label(c[1].get<std::string>());
      if (!idx.count(a) || !idx.count(b)) throw std::invalid_argument("cover uses unknown object");
      leq[idx[a]][idx[b]] = true;
    }
    for (int k = 0; k < nn; ++k)
      for (int i = 0; i < nn; ++i)
        for (int l = 0; l < nn; ++l)
          if (leq[i][k] && leq[k][l]) leq[i][l] = true;
    shape = FinPoset::from_table(std::move(objs), std::move(leq));
  }
  std::vector<ChainComplex> values(shape.size(), ChainComplex(f));
  for (const auto& [key, val] : j["complexes"].items()) {
    const int i = shape.index(parse_label(key));
    if (i < 0) throw std::invalid_argument("complex given for unknown object " + key);
    values[i] = complex_from_json(val, f);
  }
  std::map<std::pair<int, int>, ChainMap> covers;
  Json arrows = j.contains("arrows") ? j["arrows"] : Json::object();
  for (const auto& [a, b] : shape.covers()) {
    const std::string key = shape.label(a).str() + "->" + shape.label(b).str();
    std::map<int, Matrix> comps;
    if (arrows.contains(key)) {
      for (const auto& [deg, entries] : arrows[key].items()) {
        const int n = std::stoi(deg);
        comps.emplace(n, matrix_from_entries(entries, f, values[b].dim(n), values[a].dim(n)));
      }
    }
    covers.emplace(std::make_pair(a, b), ChainMap(values[a], values[b], std::move(comps), true));
  }
  return Diagram::make(shape, std::move(values), std::move(covers), /*verify=*/true);
}

Json quiver_to_json(const QuiverComplex& q) {
  Json j;
  j["n"] = q.n;
  Json cs = Json::array();
  for (const auto& c : q.c) cs.push_back(complex_to_json(c));
  j["complexes"] = std::move(cs);
  Json as = Json::array();
  for (const auto& a : q.alpha) {
    Json entry = Json::object();
    for (int n = std::max(a.source().lo(), a.target().lo());
         n <= std::min(a.source().hi(), a.target().hi()); ++n) {
      const Matrix c = a.component(n);
      if (c.rows() == 0 || c.cols() == 0 || c.is_zero()) continue;
      entry[std::to_string(n)] = matrix_entries(c);
    }
    as.push_back(std::move(entry));
  }
  j["maps"] = std::move(as);
  return j;
}

Json homology_to_json(const std::map<int, int>& h) {
  Json j = Json::object();
  for (const auto& [n, d] : h) j[std::to_string(n)] = d;
  return j;
}

Json membership_to_json(const MembershipReport& r) {
  Json j;
  j["pass"] = r.pass;
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json e;
    e["kind"] = c.kind;
    e["where"] = c.where;
    e["ok"] = c.ok;
    if (!c.ok && c.kind == "vanishing") e["homology"] = homology_to_json(c.homology);
    conds.push_back(std::move(e));
  }
  j["conditions"] = std::move(conds);
  return j;
}

std::string dump_deterministic(const Json& j) { return j.dump(2); }

}  // namespace kanex
