#include "gradalg/host.hpp"

#include <deque>

#include "gradalg/errors.hpp"
#include "gradalg/linalg.hpp"

namespace gradalg {

Host HostContext::graded_vec(FinAbGroup group, Cochain2 braid) {
  if (braid.group != group) throw DomainError("braiding table lives on a different group");
  if (!check_bicharacter(braid).ok) throw DomainError("GradedVec braiding must be a bicharacter");
  auto h = std::shared_ptr<HostContext>(new HostContext());
  h->kind_ = HostKind::GradedVec;
  h->group_ = std::move(group);
  h->braid_ = std::move(braid);
  return h;
}

Host HostContext::rep_cat(std::vector<std::vector<int>> mul, std::vector<int> generators) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw DomainError("empty multiplication table");
  if (n > 64) throw UnsupportedInput("RepCat groups are limited to order 64");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n) throw DomainError("multiplication table is not square");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) throw DomainError("multiplication table row is not a permutation");
      seen[v] = 1;
    }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = mul[a][b] == b && mul[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw DomainError("multiplication table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw DomainError("multiplication table is not associative");
  auto h = std::shared_ptr<HostContext>(new HostContext());
  h->kind_ = HostKind::RepCat;
  h->identity_ = e;
  h->inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == e) h->inverse_[a] = b;
  if (generators.empty()) {
    for (int a = 0; a < n; ++a) generators.push_back(a);
  }
  for (int g : generators) {
    if (g < 0 || g >= n) throw DomainError("generator index out of range");
  }
  std::vector<char> reached(n, 0);
  reached[e] = 1;
  std::deque<int> queue{e};
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int g : generators) {
      const int b = mul[a][g];
      if (!reached[b]) {
        reached[b] = 1;
        queue.push_back(b);
      }
    }
  }
  for (char r : reached) {
    if (!r) throw DomainError("generators do not generate the group");
  }
  h->mul_ = std::move(mul);
  h->generators_ = std::move(generators);
  return h;
}

bool operator==(const HostContext& a, const HostContext& b) {
  return a.kind_ == b.kind_ && a.group_ == b.group_ && a.braid_ == b.braid_ && a.mul_ == b.mul_;
}

HostObject HostContext::unit() const {
  HostObject x;
  x.dim = 1;
  if (kind_ == HostKind::GradedVec) {
    x.grades = {0};
  } else {
    x.rep.assign(mul_.size(), Matrix::identity(1));
  }
  return x;
}

HostObject HostContext::zero_object() const {
  HostObject x;
  if (kind_ == HostKind::RepCat) x.rep.assign(mul_.size(), Matrix(0, 0));
  return x;
}

HostObject HostContext::graded_object(std::vector<int> grades) const {
  if (kind_ != HostKind::GradedVec) throw DomainError("graded object requested in a RepCat host");
  HostObject x;
  x.dim = grades.size();
  x.grades = std::move(grades);
  validate(x);
  return x;
}

HostObject HostContext::graded_object_from_dims(const std::map<int, std::size_t>& dims) const {
  std::vector<int> grades;
  for (const auto& [g, d] : dims) grades.insert(grades.end(), d, g);
  return graded_object(std::move(grades));
}

HostObject HostContext::rep_object(const std::vector<Matrix>& images) const {
  if (kind_ != HostKind::RepCat) throw DomainError("representation requested in a GradedVec host");
  if (images.size() != generators_.size()) throw DomainError("one matrix per generator expected");
  const std::size_t d = images.empty() ? 0 : images[0].rows();
  std::vector<Matrix> all(mul_.size());
  std::vector<char> known(mul_.size(), 0);
  all[identity_] = Matrix::identity(d);
  known[identity_] = 1;
  std::deque<int> queue{identity_};
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const int b = mul_[a][generators_[k]];
      if (known[b]) continue;
      if (images[k].rows() != d || images[k].cols() != d) throw DomainError("generator matrices of unequal size");
      all[b] = all[a] * images[k];
      known[b] = 1;
      queue.push_back(b);
    }
  }
  HostObject x = rep_object_all(std::move(all));
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (x.rep[generators_[k]] != images[k]) throw DomainError("generator images violate the group relations");
  }
  return x;
}

HostObject HostContext::rep_object_all(std::vector<Matrix> images) const {
  if (kind_ != HostKind::RepCat) throw DomainError("representation requested in a GradedVec host");
  HostObject x;
  x.dim = images.empty() ? 0 : images[0].rows();
  x.rep = std::move(images);
  validate(x);
  return x;
}

void HostContext::validate(const HostObject& x) const {
  if (kind_ == HostKind::GradedVec) {
    if (x.grades.size() != x.dim || !x.rep.empty()) throw DomainError("graded object data inconsistent");
    for (int g : x.grades) {
      if (g < 0 || g >= group_.size()) throw DomainError("host grade out of range");
    }
    return;
  }
  const std::size_t n = mul_.size();
  if (x.rep.size() != n || !x.grades.empty()) throw DomainError("representation must list one matrix per element");
  for (const auto& m : x.rep) {
    if (m.rows() != x.dim || m.cols() != x.dim) throw DomainError("representation matrix has wrong size");
  }
  if (!x.rep[identity_].is_identity()) throw DomainError("identity element does not act trivially");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (x.rep[mul_[a][b]] != x.rep[a] * x.rep[b]) throw DomainError("representation violates the group law");
}

HostObject HostContext::direct_sum(const HostObject& a, const HostObject& b) const {
  HostObject x;
  x.dim = a.dim + b.dim;
  if (kind_ == HostKind::GradedVec) {
    x.grades = a.grades;
    x.grades.insert(x.grades.end(), b.grades.begin(), b.grades.end());
    return x;
  }
  for (std::size_t g = 0; g < mul_.size(); ++g) {
    Matrix m(x.dim, x.dim);
    for (std::size_t c = 0; c < a.dim; ++c) m.set_col(c, a.rep[g].col(c));
    for (std::size_t c = 0; c < b.dim; ++c) {
      SparseVec col = b.rep[g].col(c);
      for (auto& e : col) e.first += static_cast<std::uint32_t>(a.dim);
      m.set_col(a.dim + c, std::move(col));
    }
    x.rep.push_back(std::move(m));
  }
  return x;
}

HostObject HostContext::tensor(const HostObject& a, const HostObject& b) const {
  HostObject x;
  x.dim = a.dim * b.dim;
  if (kind_ == HostKind::GradedVec) {
    x.grades.reserve(x.dim);
    for (int ga : a.grades)
      for (int gb : b.grades) x.grades.push_back(group_.add(ga, gb));
    return x;
  }
  x.rep.reserve(mul_.size());
  for (std::size_t g = 0; g < mul_.size(); ++g) x.rep.push_back(Matrix::kron(a.rep[g], b.rep[g]));
  return x;
}

HostObject HostContext::tensor(const std::vector<HostObject>& factors) const {
  HostObject x = unit();
  for (const auto& f : factors) x = tensor(x, f);
  return x;
}

Matrix HostContext::braiding(const HostObject& x, const HostObject& y) const {
  const std::size_t dx = x.dim, dy = y.dim;
  Matrix c(dy * dx, dx * dy);
  for (std::size_t a = 0; a < dx; ++a) {
    for (std::size_t b = 0; b < dy; ++b) {
      Cyclotomic s = kind_ == HostKind::GradedVec ? braid_(x.grades[a], y.grades[b]) : Cyclotomic(1);
      c.set_col(a * dy + b, SparseVec{{static_cast<std::uint32_t>(b * dx + a), std::move(s)}});
    }
  }
  return c;
}

Matrix HostContext::braiding_inverse(const HostObject& x, const HostObject& y) const {
  const std::size_t dx = x.dim, dy = y.dim;
  Matrix c(dx * dy, dy * dx);
  for (std::size_t a = 0; a < dx; ++a) {
    for (std::size_t b = 0; b < dy; ++b) {
      Cyclotomic s = kind_ == HostKind::GradedVec ? braid_(x.grades[a], y.grades[b]).inverse() : Cyclotomic(1);
      c.set_col(b * dx + a, SparseVec{{static_cast<std::uint32_t>(a * dy + b), std::move(s)}});
    }
  }
  return c;
}

std::vector<Matrix> HostContext::hom_basis(const HostObject& x, const HostObject& y) const {
  std::vector<Matrix> out;
  const std::size_t dx = x.dim, dy = y.dim;
  if (kind_ == HostKind::GradedVec) {
    for (std::size_t c = 0; c < dx; ++c) {
      for (std::size_t r = 0; r < dy; ++r) {
        if (x.grades[c] != y.grades[r]) continue;
        Matrix m(dy, dx);
        m.set_col(c, SparseVec{{static_cast<std::uint32_t>(r), Cyclotomic(1)}});
        out.push_back(std::move(m));
      }
    }
    return out;
  }
  // Reynolds projector on elementary matrices E_rc, vectorized column-major.
  const std::size_t n = mul_.size();
  const Cyclotomic inv_order = Cyclotomic::rational(1, static_cast<long long>(n));
  std::vector<Matrix> vinv_t(n);
  for (std::size_t g = 0; g < n; ++g) vinv_t[g] = x.rep[inverse_[g]].transpose();
  SpanBuilder span(dx * dy);
  for (std::size_t c = 0; c < dx; ++c) {
    for (std::size_t r = 0; r < dy; ++r) {
      // P(E_rc)[i][j] = |G|^-1 sum_g W(g)[i][r] * V(g^-1)[c][j]
      Matrix acc(dy, dx);
      for (std::size_t g = 0; g < n; ++g) {
        const SparseVec& wcol = y.rep[g].col(r);
        const SparseVec& vrow = vinv_t[g].col(c);
        if (wcol.empty() || vrow.empty()) continue;
        Matrix outer(dy, dx);
        for (const auto& [j, vv] : vrow) {
          SparseVec col;
          col.reserve(wcol.size());
          for (const auto& [i, wv] : wcol) col.emplace_back(i, wv * vv);
          outer.set_col(j, std::move(col));
        }
        acc += outer;
      }
      SparseVec vec;
      for (std::size_t j = 0; j < dx; ++j) {
        for (const auto& [i, v] : acc.col(j)) vec.emplace_back(static_cast<std::uint32_t>(j * dy + i), inv_order * v);
      }
      span.add(vec);
      if (span.dim() == dx * dy) break;
    }
  }
  for (const auto& v : span.rref()) {
    Matrix m(dy, dx);
    for (const auto& [idx, val] : v) m.set(idx % dy, idx / dy, val);
    out.push_back(std::move(m));
  }
  return out;
}

bool HostContext::is_morphism(const HostObject& x, const HostObject& y, const Matrix& f) const {
  if (f.rows() != y.dim || f.cols() != x.dim) return false;
  if (kind_ == HostKind::GradedVec) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      for (const auto& [r, v] : f.col(c)) {
        if (y.grades[r] != x.grades[c]) return false;
      }
    }
    return true;
  }
  for (int g : generators_) {
    if (y.rep[g] * f != f * x.rep[g]) return false;
  }
  return true;
}

std::optional<Matrix> HostContext::find_isomorphism(const HostObject& x, const HostObject& y) const {
  if (x.dim != y.dim) return std::nullopt;
  if (kind_ == HostKind::GradedVec) {
    Matrix f(y.dim, x.dim);
    std::map<int, std::vector<std::size_t>> slots;
    for (std::size_t r = y.dim; r-- > 0;) slots[y.grades[r]].push_back(r);
    for (std::size_t c = 0; c < x.dim; ++c) {
      auto& s = slots[x.grades[c]];
      if (s.empty()) return std::nullopt;
      f.set(s.back(), c, 1);
      s.pop_back();
    }
    return f;
  }
  const auto basis = hom_basis(x, y);
  if (basis.empty()) return x.dim == 0 ? std::optional<Matrix>(Matrix(0, 0)) : std::nullopt;
  for (const auto& b : basis) {
    if (inverse(b)) return b;
  }
  // Invertible elements are dense in the Hom space when they exist; try a
  // fixed sequence of small integer combinations.
  for (long long trial = 1; trial <= 32; ++trial) {
    Matrix f(y.dim, x.dim);
    long long c = trial;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      c = (c * 7 + 3) % 11;
      f += Cyclotomic(c - 5) * basis[k];
    }
    if (inverse(f)) return f;
  }
  return std::nullopt;
}

bool HostContext::is_simple(const HostObject& x) const { return x.dim > 0 && hom_basis(x, x).size() == 1; }

std::vector<int> HostContext::host_keys(const HostObject& x) const {
  if (kind_ == HostKind::GradedVec) return x.grades;
  return std::vector<int>(x.dim, 0);
}

HostObject HostContext::subobject(const HostObject& x, const Matrix& basis, const std::vector<std::size_t>& pivots) const {
  HostObject s;
  s.dim = pivots.size();
  if (kind_ == HostKind::GradedVec) {
    for (auto p : pivots) s.grades.push_back(x.grades[p]);
    return s;
  }
  for (const auto& m : x.rep) s.rep.push_back((m * basis).select_rows(pivots));
  return s;
}

ImageSplitting HostContext::split_idempotent(const HostObject& x, const Matrix& pi) const {
  const auto cs = column_space(pi);
  ImageSplitting out;
  out.e = cs.basis;
  out.r = pi.select_rows(cs.pivots);
  out.pivots = cs.pivots;
  out.object = subobject(x, cs.basis, cs.pivots);
  return out;
}

ImageSplitting HostContext::image(const HostObject& /*x*/, const HostObject& y, const Matrix& f) const {
  const auto cs = column_space(f);
  ImageSplitting out;
  out.e = cs.basis;
  out.r = f.select_rows(cs.pivots);
  out.pivots = cs.pivots;
  out.object = subobject(y, cs.basis, cs.pivots);
  return out;
}

CokernelData HostContext::cokernel(const HostObject& y, const Matrix& f) const {
  const auto q = quotient(f);
  CokernelData out;
  out.projection = q.q;
  out.section = q.section;
  out.complement = q.span.complement;
  out.object.dim = q.span.complement.size();
  if (kind_ == HostKind::GradedVec) {
    for (auto t : q.span.complement) out.object.grades.push_back(y.grades[t]);
  } else {
    for (const auto& m : y.rep) out.object.rep.push_back(q.q * m * q.section);
  }
  return out;
}

std::map<int, Matrix> grade_components(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt,
                                       const FinAbGroup& gamma) {
  std::map<int, Matrix> out;
  for (std::size_t c = 0; c < f.cols(); ++c) {
    for (const auto& [r, v] : f.col(c)) {
      const int d = gamma.sub(tgt[r], src[c]);
      auto it = out.find(d);
      if (it == out.end()) it = out.emplace(d, Matrix(f.rows(), f.cols())).first;
      it->second.set(r, c, v);
    }
  }
  return out;
}

bool is_homogeneous(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt, const FinAbGroup& gamma,
                    int degree) {
  for (std::size_t c = 0; c < f.cols(); ++c) {
    for (const auto& [r, v] : f.col(c)) {
      if (gamma.sub(tgt[r], src[c]) != degree) return false;
    }
  }
  return true;
}

GradedObject graded_tensor_object(const HostContext& host, const GradedObject& a, const GradedObject& b,
                                  const FinAbGroup& gamma) {
  GradedObject out;
  out.obj = host.tensor(a.obj, b.obj);
  out.mgrades.reserve(out.obj.dim);
  for (int ga : a.mgrades)
    for (int gb : b.mgrades) out.mgrades.push_back(gamma.add(ga, gb));
  return out;
}

}  // namespace gradalg
