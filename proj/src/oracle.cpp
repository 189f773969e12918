#include "unicomm/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <set>

namespace unicomm {

std::uint64_t sl_order(std::uint64_t q, std::size_t n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (qn > kMax / q) throw Error(ErrorCode::BudgetExceeded, "group order overflows");
    qn *= q;
  }
  // Divide one factor by q - 1 up front: q^n - 1 is divisible by q - 1.
  std::uint64_t order = (qn - 1) / (q - 1);
  std::uint64_t qi = q;
  for (std::size_t i = 1; i < n; ++i) {
    const std::uint64_t factor = qn - qi;
    if (order > kMax / factor) throw Error(ErrorCode::BudgetExceeded, "group order overflows");
    order *= factor;
    qi *= q;
  }
  return order;
}

GroupTable GroupTable::build(Field field, std::size_t n, std::uint64_t budget) {
  if (!field.is_finite()) throw Error(ErrorCode::UnsupportedField, "the oracle enumerates finite fields only");
  if (field.order() > 256) throw Error(ErrorCode::UnsupportedField, "the oracle handles q <= 256");
  if (n == 0) throw Error(ErrorCode::SizeMismatch, "n must be at least 1");
  const std::uint32_t q = field.order();
  const std::uint64_t expected = sl_order(q, n);
  if (expected > budget) {
    throw Error(ErrorCode::BudgetExceeded, "|SL_" + std::to_string(n) + "(" + field.to_string() +
                                               ")| = " + std::to_string(expected) + " exceeds the budget " +
                                               std::to_string(budget));
  }

  GroupTable t;
  t.field_ = field;
  t.n_ = n;
  t.q_ = q;
  t.add_.resize(std::size_t{q} * q);
  t.mul_.resize(std::size_t{q} * q);
  t.neg_.resize(q);
  t.inv_.resize(q);
  const auto elements = field.elements();
  for (std::uint32_t a = 0; a < q; ++a) {
    t.neg_[a] = static_cast<std::uint16_t>((-elements[a]).code());
    if (a != 0) t.inv_[a] = static_cast<std::uint16_t>(elements[a].inv().code());
    for (std::uint32_t b = 0; b < q; ++b) {
      t.add_[a * q + b] = static_cast<std::uint16_t>((elements[a] + elements[b]).code());
      t.mul_[a * q + b] = static_cast<std::uint16_t>((elements[a] * elements[b]).code());
    }
  }
  const std::uint16_t one = static_cast<std::uint16_t>(field.one().code());

  // Odometer over all q^(n^2) matrices, keeping those of determinant 1.
  const std::size_t nn = n * n;
  std::vector<std::uint16_t> cur(nn, 0);
  t.codes_.reserve(expected * nn);
  for (;;) {
    if (t.det(cur) == one) t.codes_.insert(t.codes_.end(), cur.begin(), cur.end());
    std::size_t pos = nn;
    while (pos > 0) {
      --pos;
      if (++cur[pos] < q) break;
      cur[pos] = 0;
    }
    if (pos == 0 && cur[0] == 0) break;
  }
  t.count_ = t.codes_.size() / nn;
  if (t.count_ != expected) {
    throw Error(ErrorCode::Internal, "enumerated " + std::to_string(t.count_) + " elements, formula says " +
                                         std::to_string(expected));
  }

  t.index_.reserve(t.count_ * 2);
  for (Id id = 0; id < t.count_; ++id) t.index_.emplace(t.key(t.entries(id)), id);

  std::vector<std::uint16_t> ident(nn, 0);
  for (std::size_t i = 0; i < n; ++i) ident[i * n + i] = one;
  t.identity_ = t.lookup(ident.data());

  t.inverse_.resize(t.count_);
  t.u2_flag_.assign(t.count_, false);
  for (Id id = 0; id < t.count_; ++id) {
    t.inverse_[id] = t.lookup(t.invert(t.entries(id)).data());
    if (id != t.identity_ && t.square_zero_shift(t.entries(id))) {
      t.u2_flag_[id] = true;
      t.u2_.push_back(id);
    }
  }
  return t;
}

std::uint64_t GroupTable::key(const std::uint16_t* e) const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < n_ * n_; ++i) k = k * q_ + e[i];
  return k;
}

GroupTable::Id GroupTable::lookup(const std::uint16_t* e) const {
  const auto it = index_.find(key(e));
  if (it == index_.end()) throw Error(ErrorCode::Internal, "product left the group table");
  return it->second;
}

void GroupTable::product(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      std::uint16_t s = 0;
      for (std::size_t k = 0; k < n_; ++k) s = add(s, mul(a[i * n_ + k], b[k * n_ + j]));
      out[i * n_ + j] = s;
    }
  }
}

std::uint16_t GroupTable::det(std::vector<std::uint16_t> m) const {
  std::uint16_t d = static_cast<std::uint16_t>(field_.one().code());
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      d = neg(d);
    }
    d = mul(d, m[c * n_ + c]);
    const std::uint16_t inv = inv_[m[c * n_ + c]];
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (m[r * n_ + c] == 0) continue;
      const std::uint16_t f = neg(mul(m[r * n_ + c], inv));
      for (std::size_t j = c; j < n_; ++j) m[r * n_ + j] = add(m[r * n_ + j], mul(f, m[c * n_ + j]));
    }
  }
  return d;
}

std::vector<std::uint16_t> GroupTable::invert(const std::uint16_t* src) const {
  const std::size_t w = 2 * n_;
  const std::uint16_t one = static_cast<std::uint16_t>(field_.one().code());
  std::vector<std::uint16_t> m(n_ * w, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m[i * w + j] = src[i * n_ + j];
    m[i * w + n_ + i] = one;
  }
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * w + c] == 0) ++piv;
    if (piv == n_) throw Error(ErrorCode::Singular, "oracle element is singular");
    for (std::size_t j = 0; j < w; ++j) std::swap(m[piv * w + j], m[c * w + j]);
    const std::uint16_t inv = inv_[m[c * w + c]];
    for (std::size_t j = 0; j < w; ++j) m[c * w + j] = mul(m[c * w + j], inv);
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || m[r * w + c] == 0) continue;
      const std::uint16_t f = neg(m[r * w + c]);
      for (std::size_t j = 0; j < w; ++j) m[r * w + j] = add(m[r * w + j], mul(f, m[c * w + j]));
    }
  }
  std::vector<std::uint16_t> out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i * n_ + j] = m[i * w + n_ + j];
  }
  return out;
}

bool GroupTable::square_zero_shift(const std::uint16_t* m) const {
  const std::uint16_t one = static_cast<std::uint16_t>(field_.one().code());
  std::vector<std::uint16_t> s(m, m + n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) s[i * n_ + i] = add(s[i * n_ + i], neg(one));
  std::vector<std::uint16_t> sq(n_ * n_);
  product(s.data(), s.data(), sq.data());
  return std::all_of(sq.begin(), sq.end(), [](std::uint16_t v) { return v == 0; });
}

bool GroupTable::is_scalar(Id id) const {
  const std::uint16_t* e = entries(id);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && e[i * n_ + j] != 0) return false;
      if (i == j && e[i * n_ + j] != e[0]) return false;
    }
  }
  return true;
}

Matrix GroupTable::matrix(Id id) const {
  Matrix m(field_, n_);
  const std::uint16_t* e = entries(id);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = field_.from_code(e[i * n_ + j]);
  }
  return m;
}

std::optional<GroupTable::Id> GroupTable::find(const Matrix& m) const {
  if (m.field() != field_ || m.size() != n_) return std::nullopt;
  std::vector<std::uint16_t> e(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] = static_cast<std::uint16_t>(m(i, j).code());
  }
  const auto it = index_.find(key(e.data()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupTable::Id GroupTable::multiply(Id a, Id b) const {
  std::uint16_t buf[64];
  std::vector<std::uint16_t> big;
  std::uint16_t* out = buf;
  if (n_ * n_ > 64) {
    big.resize(n_ * n_);
    out = big.data();
  }
  product(entries(a), entries(b), out);
  return lookup(out);
}

GroupTable::Id GroupTable::commutator(Id x, Id y) const {
  return multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
}

std::uint16_t GroupTable::trace(Id id) const {
  const std::uint16_t* e = entries(id);
  std::uint16_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) s = add(s, e[i * n_ + i]);
  return s;
}

std::vector<GroupTable::Id> commutator_generators(const GroupTable& t) {
  std::vector<bool> seen(t.order(), false);
  for (auto x : t.u2_ids()) {
    for (auto y : t.u2_ids()) seen[t.commutator(x, y)] = true;
  }
  std::vector<GroupTable::Id> out;
  for (GroupTable::Id id = 0; id < t.order(); ++id) {
    if (seen[id]) out.push_back(id);
  }
  return out;
}

int LengthTable::max_finite() const {
  int best = 0;
  for (int l : length) best = std::max(best, l);
  return best;
}

std::size_t LengthTable::reachable() const {
  return static_cast<std::size_t>(std::count_if(length.begin(), length.end(), [](int l) { return l >= 0; }));
}

LengthTable bfs_lengths(const GroupTable& t, const std::vector<GroupTable::Id>& generators) {
  LengthTable out{std::vector<int>(t.order(), kUnreachable)};
  std::deque<GroupTable::Id> queue{t.identity()};
  out.length[t.identity()] = 0;
  while (!queue.empty()) {
    const auto g = queue.front();
    queue.pop_front();
    for (auto s : generators) {
      const auto h = t.multiply(g, s);
      if (out.length[h] == kUnreachable) {
        out.length[h] = out.length[g] + 1;
        queue.push_back(h);
      }
    }
  }
  return out;
}

LengthTable bfs_lengths(const GroupTable& t) { return bfs_lengths(t, commutator_generators(t)); }

namespace {

std::vector<GroupTable::Id> closure(const GroupTable& t, const std::vector<GroupTable::Id>& generators) {
  std::vector<bool> in(t.order(), false);
  std::vector<GroupTable::Id> members{t.identity()};
  in[t.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : generators) {
      const auto h = t.multiply(members[i], s);
      if (!in[h]) {
        in[h] = true;
        members.push_back(h);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

constexpr std::size_t kBruteForceDerivedLimit = 3000;

}  // namespace

std::vector<GroupTable::Id> derived_subgroup_normal_closure(const GroupTable& t) {
  // U2 matrices (transvections) generate SL_n, so G' is the normal closure of
  // the commutators of pairs of them.
  std::set<GroupTable::Id> gens;
  for (auto c : commutator_generators(t)) gens.insert(c);
  std::vector<GroupTable::Id> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<GroupTable::Id> next;
    for (auto g : frontier) {
      for (auto u : t.u2_ids()) {
        const auto c = t.multiply(t.multiply(u, g), t.inverse(u));
        if (gens.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return closure(t, std::vector<GroupTable::Id>(gens.begin(), gens.end()));
}

std::vector<GroupTable::Id> derived_subgroup(const GroupTable& t) {
  if (t.order() > kBruteForceDerivedLimit) return derived_subgroup_normal_closure(t);
  std::vector<bool> seen(t.order(), false);
  for (GroupTable::Id x = 0; x < t.order(); ++x) {
    for (GroupTable::Id y = 0; y < t.order(); ++y) seen[t.commutator(x, y)] = true;
  }
  std::vector<GroupTable::Id> gens;
  for (GroupTable::Id id = 0; id < t.order(); ++id) {
    if (seen[id]) gens.push_back(id);
  }
  return closure(t, gens);
}

TraceCheck check_trace_characterization(const GroupTable& t, const LengthTable& lengths) {
  if (t.n() != 2) throw Error(ErrorCode::SizeMismatch, "the trace characterization is for SL_2");
  const std::uint32_t q = t.field().order();
  std::vector<bool> square(q, false);
  for (std::uint16_t a = 1; a < q; ++a) square[t.mul(a, a)] = true;
  const std::uint16_t two = static_cast<std::uint16_t>(t.field().from_int(2).code());
  TraceCheck out;
  for (GroupTable::Id id = 0; id < t.order(); ++id) {
    if (t.is_scalar(id)) continue;
    ++out.nonscalar_checked;
    const std::uint16_t shifted = t.add(t.trace(id), t.neg(two));
    const bool predicted = shifted != 0 && square[shifted];
    if (predicted != (lengths.length[id] == 1)) out.counterexamples.push_back(id);
  }
  return out;
}

std::string lengths_csv(const GroupTable& t, const LengthTable& lengths) {
  std::string out = "id,matrix,trace,is_u2,bfs_length\n";
  for (GroupTable::Id id = 0; id < t.order(); ++id) {
    const Matrix m = t.matrix(id);
    std::string tokens;
    for (std::size_t i = 0; i < t.n(); ++i) {
      if (i) tokens += ";";
      for (std::size_t j = 0; j < t.n(); ++j) {
        if (j) tokens += " ";
        tokens += m(i, j).to_string();
      }
    }
    out += std::to_string(id) + ",\"" + tokens + "\"," + t.field().from_code(t.trace(id)).to_string() + "," +
           (t.is_u2(id) ? "1" : "0") + "," +
           (lengths.length[id] == kUnreachable ? std::string("inf") : std::to_string(lengths.length[id])) + "\n";
  }
  return out;
}

bool in_small_derived_subgroup(const Matrix& a) {
  if (a.size() != 2 || !a.field().is_finite() || a.field().order() > 3) {
    throw Error(ErrorCode::PreconditionViolated, "small derived subgroup lookup is for SL_2 over |F| <= 3");
  }
  struct Cached {
    GroupTable table;
    std::vector<bool> member;
  };
  static std::once_flag once[2];
  static std::optional<Cached> cache[2];
  const std::size_t slot = a.field().order() == 2 ? 0 : 1;
  std::call_once(once[slot], [&] {
    GroupTable t = GroupTable::build(a.field(), 2);
    std::vector<bool> member(t.order(), false);
    for (auto id : derived_subgroup(t)) member[id] = true;
    cache[slot] = Cached{std::move(t), std::move(member)};
  });
  const auto id = cache[slot]->table.find(a);
  return id && cache[slot]->member[*id];
}

}  // namespace unicomm
