#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kanex {

// Object label: a tuple of small integers, or the distinguished symbol pt.
struct Label {
  bool pt = false;
  std::vector<int> c;

  static Label point() { return Label{true, {}}; }
  static Label of(int a) { return Label{false, {a}}; }
  static Label of(int a, int b) { return Label{false, {a, b}}; }
  static Label of(int a, int b, int d) { return Label{false, {a, b, d}}; }

  bool operator==(const Label& o) const { return pt == o.pt && c == o.c; }
  bool operator!=(const Label& o) const { return !(*this == o); }
  bool operator<(const Label& o) const {
    if (pt != o.pt) return pt < o.pt;
    return c < o.c;
  }
  std::string str() const;
};

Label parse_label(const std::string& s);

// Finite poset: explicit object list (construction order is the canonical
// order used everywhere for determinism) and a reflexive-transitive leq table,
// validated on construction.
class FinPoset {
 public:
  FinPoset() = default;
  static FinPoset make(std::vector<Label> objects,
                       const std::function<bool(const Label&, const Label&)>& leq);
  static FinPoset from_table(std::vector<Label> objects, std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(objects_.size()); }
  const std::vector<Label>& objects() const { return objects_; }
  const Label& label(int i) const { return objects_[i]; }
  int index(const Label& l) const;  // -1 if absent
  int index_checked(const Label& l) const;
  bool contains(const Label& l) const { return index(l) >= 0; }

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool leq(const Label& a, const Label& b) const { return leq_[index_checked(a)][index_checked(b)]; }
  bool lt(int a, int b) const { return a != b && leq_[a][b]; }

  // Covering relation a <. b (no c strictly between).
  std::vector<std::pair<int, int>> covers() const;
  std::vector<int> upper_covers(int a) const;
  std::vector<int> lower_covers(int a) const;

  // All nonempty strict chains, deterministically ordered (lexicographic in
  // object indices).
  std::vector<std::vector<int>> chains() const;

  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

  bool operator==(const FinPoset& o) const { return objects_ == o.objects_ && leq_ == o.leq_; }
  bool operator!=(const FinPoset& o) const { return !(*this == o); }

 private:
  std::vector<Label> objects_;
  std::vector<std::vector<bool>> leq_;
  std::map<Label, int> index_;
};

FinPoset interval(int n);               // 0 < 1 < ... < n
FinPoset product(const FinPoset& p, const FinPoset& q);  // labels are concatenated tuples

struct Subposet {
  FinPoset poset;
  std::vector<int> parent_index;  // subposet object i = parent object parent_index[i]
};
Subposet full_subposet(const FinPoset& p, const std::vector<int>& indices);

class MonotoneMap {
 public:
  MonotoneMap() = default;
  static MonotoneMap make(FinPoset source, FinPoset target, std::vector<int> assignment,
                          bool check = true);
  static MonotoneMap make(FinPoset source, FinPoset target,
                          const std::function<Label(const Label&)>& f, bool check = true);
  static MonotoneMap identity(const FinPoset& p);

  const FinPoset& source() const { return source_; }
  const FinPoset& target() const { return target_; }
  int apply(int i) const { return map_[i]; }
  Label apply(const Label& l) const { return target_.label(map_[source_.index_checked(l)]); }
  const std::vector<int>& assignment() const { return map_; }

  bool is_injective() const;
  bool is_full() const;  // order-embedding: a<=a' iff u(a)<=u(a')
  bool is_surjective() const;

 private:
  FinPoset source_, target_;
  std::vector<int> map_;
};

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

enum class SieveKind { None, Sieve, Cosieve, Both };
SieveKind sieve_kind(const MonotoneMap& u);
std::string to_string(SieveKind k);

enum class SliceSide { Under, Over };
// Under: the full subposet {a in source : u(a) <= b} with its inclusion into
// the source (realizes (u/b)); Over dually realizes (b/u).
struct SliceResult {
  FinPoset poset;
  MonotoneMap inclusion;           // slice -> u.source
  std::vector<int> source_indices; // slice object i = source object ...
};
SliceResult slice(const MonotoneMap& u, const Label& b, SliceSide side);

}  // namespace kanex
