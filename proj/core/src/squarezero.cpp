#include "sqzero/squarezero.hpp"

#include <string>

#include "sqzero/errors.hpp"
#include "sqzero/linalg.hpp"

namespace sqzero {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

bool same_shape(const Matrix& a, const Matrix& b) { return a.rows() == b.rows() && a.cols() == b.cols(); }

}  // namespace

std::vector<std::string> WitnessCheck::violations() const {
  std::vector<std::string> out;
  if (!shapes_agree) out.emplace_back("shapes differ");
  if (!factors_nonnegative) out.emplace_back("M, N >= 0");
  if (!product_equals_t) out.emplace_back("MN = T");
  if (!m_square_zero) out.emplace_back("M^2 = 0");
  if (!n_square_zero) out.emplace_back("N^2 = 0");
  if (!reverse_product_zero) out.emplace_back("NM = 0");
  if (!u_is_sum) out.emplace_back("U = M + N");
  return out;
}

WitnessCheck verify_witness(const SquareZeroWitness& w, const Matrix& t) {
  WitnessCheck c;
  if (!t.is_square() || !same_shape(w.m, t) || !same_shape(w.n, t)) {
    c.shapes_agree = false;
    c.factors_nonnegative = c.product_equals_t = c.m_square_zero = c.n_square_zero =
        c.reverse_product_zero = c.u_is_sum = false;
    return c;
  }
  c.factors_nonnegative = w.m.is_nonnegative() && w.n.is_nonnegative();
  c.product_equals_t = matmul(w.m, w.n) == t;
  c.m_square_zero = matmul(w.m, w.m).is_zero();
  c.n_square_zero = matmul(w.n, w.n).is_zero();
  c.reverse_product_zero = matmul(w.n, w.m).is_zero();
  c.u_is_sum = same_shape(w.u, t) && w.u == w.m + w.n;
  return c;
}

SquareZeroWitness construct_factors_from_form(const BlockForm& form, const Matrix& left,
                                              const Matrix& right) {
  const auto& p = form.partition;
  const std::size_t k = left.cols();
  if (left.rows() != p.first().size() || right.cols() != p.last().size() || right.rows() != k) {
    throw DimensionError("factor shapes do not match the block form");
  }
  if (k > p.middle().size()) {
    throw BudgetError("inner dimension " + std::to_string(k) + " exceeds middle dimension = " +
                      std::to_string(p.middle().size()));
  }
  left.require_nonnegative("construct_factors_from_form (L)");
  right.require_nonnegative("construct_factors_from_form (R)");
  if (matmul(left, right) != form.block) {
    throw PreconditionError("L R does not reproduce the T[I1, I3] block");
  }
  const std::size_t n = p.ambient();
  SquareZeroWitness w{Matrix(n, n), Matrix(n, n), Matrix()};
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t mid = p.middle()[t];
    for (std::size_t i = 0; i < p.first().size(); ++i) w.m(p.first()[i], mid) = left(i, t);
    for (std::size_t j = 0; j < p.last().size(); ++j) w.n(mid, p.last()[j]) = right(t, j);
  }
  w.u = w.m + w.n;
  return w;
}

Matrix cube_zero_root(const SquareZeroWitness& w) {
  require_square(w.m, "cube_zero_root");
  const Matrix product = matmul(w.m, w.n);
  const WitnessCheck check = verify_witness(w, product);
  if (!check.ok()) throw PreconditionError("cube_zero_root: witness identities violated");
  Matrix u = w.m + w.n;
  const Matrix u2 = matmul(u, u);
  if (u2 != product || !matmul(u2, u).is_zero()) {
    throw Error("cube_zero_root: U^2 = MN or U^3 = 0 failed");
  }
  return u;
}

CubeZeroForm form_from_cube_zero(const Matrix& u) {
  IndexPartition p = triple_decomposition(u);
  const Matrix t = matmul(u, u);
  Matrix block = t.submatrix(p.first().indices(), p.last().indices());
  Matrix u12 = u.submatrix(p.first().indices(), p.middle().indices());
  Matrix u23 = u.submatrix(p.middle().indices(), p.last().indices());
  CubeZeroForm out{BlockForm{std::move(p), std::move(block)}, std::move(u12), std::move(u23)};
  if (matmul(out.u12, out.u23) != out.form.block || assemble_from_form(out.form) != t) {
    throw Error("form_from_cube_zero: U^2 is not in block form");
  }
  return out;
}

const char* to_string(Answer a) {
  switch (a) {
    case Answer::kYes: return "yes";
    case Answer::kNo: return "no";
    case Answer::kUnknown: return "unknown";
  }
  return "?";
}

Verdict decide_square_zero_product(const Matrix& t, const BoundsOptions& options) {
  require_square(t, "decide_square_zero_product");
  t.require_nonnegative("decide_square_zero_product");
  Verdict v;
  if (!matmul(t, t).is_zero()) {
    v.answer = Answer::kNo;
    v.reason = "T^2 != 0";
    return v;
  }
  BlockForm form = product_form_decomposition(t);
  NNRankBounds bounds = nonneg_rank_bounds(form.block, options);
  const std::size_t budget = form.partition.middle().size();
  if (bounds.upper <= budget) {
    v.answer = Answer::kYes;
    v.witness = construct_factors_from_form(form, bounds.factorization.left, bounds.factorization.right);
    v.reason = "rank+ upper bound " + std::to_string(bounds.upper) + " (" +
               to_string(bounds.upper_certificate) + ") <= middle dimension = " + std::to_string(budget);
  } else if (bounds.lower > budget) {
    v.answer = Answer::kNo;
    v.reason = "rank+ lower bound " + std::to_string(bounds.lower) + " (" +
               to_string(bounds.lower_certificate) + ") > middle dimension = " + std::to_string(budget);
  } else {
    v.answer = Answer::kUnknown;
    v.reason = "rank+ in [" + std::to_string(bounds.lower) + ", " + std::to_string(bounds.upper) +
               "] straddles middle dimension = " + std::to_string(budget);
  }
  v.form = std::move(form);
  v.bounds = std::move(bounds);
  return v;
}

CommutatorReport commutator_analysis(const Matrix& m, const Matrix& n) {
  require_square(m, "commutator_analysis");
  if (!same_shape(m, n)) throw DimensionError("commutator_analysis: M and N differ in shape");
  m.require_nonnegative("commutator_analysis (M)");
  n.require_nonnegative("commutator_analysis (N)");
  if (!matmul(m, m).is_zero()) throw PreconditionError("commutator_analysis: M^2 != 0");
  if (!matmul(n, n).is_zero()) throw PreconditionError("commutator_analysis: N^2 != 0");

  CommutatorReport r;
  r.commutator = matmul(m, n) - matmul(n, m);
  r.nonnegative = r.commutator.is_nonnegative();
  if (!r.nonnegative) return r;

  const Matrix& t = r.commutator;
  r.m_annihilates_left = matmul(m, t).is_zero();
  r.m_annihilates_right = matmul(t, m).is_zero();
  r.n_annihilates_left = matmul(n, t).is_zero();
  r.n_annihilates_right = matmul(t, n).is_zero();

  const Matrix s = m + n;
  const Matrix s2 = matmul(s, s);
  r.sum_cube_zero = matmul(s2, s).is_zero();
  if (!r.sum_cube_zero) return r;

  IndexPartition p = triple_decomposition(s);
  const auto& i1 = p.first().indices();
  const auto& i2 = p.middle().indices();
  const auto& i3 = p.last().indices();
  r.block = t.submatrix(i1, i3);
  r.block_pattern = assemble_from_form(BlockForm{p, r.block}) == t;
  const Matrix lhs = m.submatrix(i1, i2) - n.submatrix(i1, i2);
  const Matrix rhs = m.submatrix(i2, i3) + n.submatrix(i2, i3);
  r.block_factorizes = matmul(lhs, rhs) == r.block;
  r.block_rank = rank(r.block);
  r.middle_dim = i2.size();
  r.necessary_condition = r.annihilation() && r.block_pattern && r.block_factorizes &&
                          r.block_rank <= r.middle_dim;
  r.partition = std::move(p);
  return r;
}

NecessaryCheck necessary_condition_check(const Matrix& t) {
  require_square(t, "necessary_condition_check");
  t.require_nonnegative("necessary_condition_check");
  NecessaryCheck c;
  if (!matmul(t, t).is_zero()) {
    c.reason = "T^2 != 0";
    return c;
  }
  BlockForm form = product_form_decomposition(t);
  c.block_rank = rank(form.block);
  c.middle_dim = form.partition.middle().size();
  c.holds = c.block_rank <= c.middle_dim;
  c.reason = "rank(block) = " + std::to_string(c.block_rank) + (c.holds ? " <= " : " > ") +
             "middle dimension = " + std::to_string(c.middle_dim);
  c.form = std::move(form);
  return c;
}

const char* to_string(CommutatorStatus s) {
  switch (s) {
    case CommutatorStatus::kNecessaryFails: return "necessary-fails";
    case CommutatorStatus::kProductForm: return "sufficient-holds";
    case CommutatorStatus::kGap: return "gap";
    case CommutatorStatus::kUndetermined: return "undetermined";
  }
  return "?";
}

CommutatorClassification classify_commutator_candidate(const Matrix& t, const BoundsOptions& options) {
  CommutatorClassification out;
  out.necessary = necessary_condition_check(t);
  if (!out.necessary.holds) {
    out.status = CommutatorStatus::kNecessaryFails;
    return out;
  }
  out.product = decide_square_zero_product(t, options);
  switch (out.product.answer) {
    case Answer::kYes: out.status = CommutatorStatus::kProductForm; break;
    case Answer::kNo: out.status = CommutatorStatus::kGap; break;
    case Answer::kUnknown: out.status = CommutatorStatus::kUndetermined; break;
  }
  return out;
}

}  // namespace sqzero
