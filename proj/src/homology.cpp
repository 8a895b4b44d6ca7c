#include "borekit/homology.hpp"
#include "borekit/smith.hpp"
#include "borekit/union_find.hpp"

#include <algorithm>
#include <sstream>

namespace borekit {

namespace {

SparseBoundary fromTriplets(Eigen::Index rows, Eigen::Index cols, const std::vector<Eigen::Triplet<std::int64_t>>& t) {
  SparseBoundary M(rows, cols);
  M.setFromTriplets(t.begin(), t.end());
  M.prune([](Eigen::Index, Eigen::Index, const std::int64_t& v) { return v != 0; });
  M.makeCompressed();
  return M;
}

struct Overflow {};

inline std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checkedSub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Integer checkedMul(const Integer& a, const Integer& b) { return a * b; }
inline Integer checkedSub(const Integer& a, const Integer& b) { return a - b; }

inline bool isUnit(std::int64_t v) { return v == 1 || v == -1; }
inline bool isUnit(const Integer& v) { return v == 1 || v == -1; }
inline Integer toInteger(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer toInteger(const Integer& v) { return v; }

template <typename Scalar>
class SparseEliminator {
 public:
  struct Entry {
    int row;
    Scalar value;
  };

  explicit SparseEliminator(const SparseBoundary& M)
      : rows_(static_cast<int>(M.rows())),
        cols_(static_cast<int>(M.cols())),
        columns_(static_cast<std::size_t>(cols_)),
        rowCols_(static_cast<std::size_t>(rows_)),
        rowCount_(static_cast<std::size_t>(rows_), 0),
        colAlive_(static_cast<std::size_t>(cols_), 1),
        rowAlive_(static_cast<std::size_t>(rows_), 1) {
    for (int j = 0; j < cols_; ++j)
      for (SparseBoundary::InnerIterator it(M, j); it; ++it) {
        const int i = static_cast<int>(it.row());
        columns_[j].push_back({i, Scalar(it.value())});
        rowCols_[i].push_back(j);
        ++rowCount_[i];
      }
  }

  MatrixInvariants run() {
    MatrixInvariants out;
    std::vector<char> dirty(static_cast<std::size_t>(cols_), 1);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int j = 0; j < cols_; ++j) {
        if (!colAlive_[j] || !dirty[j]) continue;
        dirty[j] = 0;
        if (columns_[j].empty()) {
          colAlive_[j] = 0;
          continue;
        }
        int best = -1;
        for (std::size_t e = 0; e < columns_[j].size(); ++e)
          if (isUnit(columns_[j][e].value) &&
              (best < 0 || rowCount_[columns_[j][e].row] < rowCount_[columns_[j][best].row]))
            best = static_cast<int>(e);
        if (best < 0) continue;
        pivot(columns_[j][best].row, j, dirty);
        ++out.rank;
        progress = true;
      }
    }
    residual(out);
    return out;
  }

 private:
  static const Entry* findRow(const std::vector<Entry>& col, int row) {
    auto it = std::lower_bound(col.begin(), col.end(), row, [](const Entry& e, int r) { return e.row < r; });
    return it != col.end() && it->row == row ? &*it : nullptr;
  }

  void pivot(int i, int j, std::vector<char>& dirty) {
    const Scalar pv = findRow(columns_[j], i)->value;  // a unit, its own inverse
    auto targets = std::move(rowCols_[i]);
    rowCols_[i].clear();
    for (int k : targets) {
      if (k == j || !colAlive_[k]) continue;
      const Entry* e = findRow(columns_[k], i);
      if (!e) continue;
      const Scalar factor = checkedMul(e->value, pv);
      subtractMultiple(k, j, factor);
      dirty[k] = 1;
    }
    for (const auto& e : columns_[j]) --rowCount_[e.row];
    columns_[j].clear();
    columns_[j].shrink_to_fit();
    colAlive_[j] = 0;
    rowAlive_[i] = 0;
  }

  // column k -= factor * column j
  void subtractMultiple(int k, int j, const Scalar& factor) {
    const auto& a = columns_[k];
    const auto& b = columns_[j];
    std::vector<Entry> merged;
    merged.reserve(a.size() + b.size());
    std::size_t p = 0, q = 0;
    while (p < a.size() || q < b.size()) {
      if (q == b.size() || (p < a.size() && a[p].row < b[q].row)) {
        merged.push_back(a[p++]);
      } else if (p == a.size() || b[q].row < a[p].row) {
        const Scalar v = checkedSub(Scalar(0), checkedMul(factor, b[q].value));
        merged.push_back({b[q].row, v});
        rowCols_[b[q].row].push_back(k);
        ++rowCount_[b[q].row];
        ++q;
      } else {
        const Scalar v = checkedSub(a[p].value, checkedMul(factor, b[q].value));
        if (v != Scalar(0))
          merged.push_back({a[p].row, v});
        else
          --rowCount_[a[p].row];
        ++p;
        ++q;
      }
    }
    columns_[k] = std::move(merged);
  }

  void residual(MatrixInvariants& out) {
    std::vector<int> liveCols, rowIndex(static_cast<std::size_t>(rows_), -1);
    int liveRows = 0;
    for (int j = 0; j < cols_; ++j) {
      if (!colAlive_[j] || columns_[j].empty()) continue;
      liveCols.push_back(j);
      for (const auto& e : columns_[j])
        if (rowIndex[e.row] < 0) rowIndex[e.row] = liveRows++;
    }
    if (liveCols.empty()) return;
    IntegerMatrix R = IntegerMatrix::Zero(liveRows, static_cast<Eigen::Index>(liveCols.size()));
    for (std::size_t c = 0; c < liveCols.size(); ++c)
      for (const auto& e : columns_[liveCols[c]]) R(rowIndex[e.row], static_cast<Eigen::Index>(c)) = toInteger(e.value);
    auto snf = smithNormalForm(R, false);
    out.rank += snf.rank;
    for (const auto& d : snf.invariantFactors())
      if (d != 1) out.torsion.push_back(d);
  }

  int rows_, cols_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<std::vector<int>> rowCols_;
  std::vector<int> rowCount_;
  std::vector<char> colAlive_, rowAlive_;
};

std::vector<MatrixInvariants> boundaryInvariants(const ChainComplex& C, int upTo) {
  std::vector<MatrixInvariants> out;
  for (int n = 0; n <= upTo; ++n) out.push_back(sparseInvariants(C.boundaries[n]));
  return out;
}

HomologyGroup groupFrom(Eigen::Index rank, const MatrixInvariants& dn, const MatrixInvariants& dn1) {
  return HomologyGroup{rank - dn.rank - dn1.rank, dn1.torsion};
}

}  // namespace

MatrixInvariants sparseInvariants(const SparseBoundary& M) {
  try {
    return SparseEliminator<std::int64_t>(M).run();
  } catch (const Overflow&) {
    return SparseEliminator<Integer>(M).run();
  }
}

ChainComplex normalizedChains(const SimplicialSet& X, int topDegree) {
  if (topDegree < 0 || topDegree > X.maxDim()) throw RangeError("chains requested above the truncation");
  ChainComplex C;
  for (int n = 0; n <= topDegree; ++n) {
    const auto cols = static_cast<Eigen::Index>(X.generatorCount(n));
    C.ranks.push_back(cols);
    if (n == 0) {
      C.boundaries.emplace_back(0, cols);
      continue;
    }
    std::vector<Eigen::Triplet<std::int64_t>> t;
    t.reserve(static_cast<std::size_t>(cols) * static_cast<std::size_t>(n + 1));
    for (Eigen::Index k = 0; k < cols; ++k)
      for (int i = 0; i <= n; ++i) {
        const Simplex& f = X.generatorFace(n, static_cast<GeneratorIndex>(k), i);
        if (f.nondegenerate()) t.emplace_back(f.generator, k, i % 2 == 0 ? 1 : -1);
      }
    C.boundaries.push_back(fromTriplets(static_cast<Eigen::Index>(X.generatorCount(n - 1)), cols, t));
  }
  if (auto bad = boundarySquareViolations(C); !bad.empty())
    throw ValidationError("boundary does not square to zero in degree " + std::to_string(bad.front()));
  return C;
}

ChainComplex normalizedChains(const SimplicialSet& X) { return normalizedChains(X, X.maxDim()); }

std::vector<int> boundarySquareViolations(const ChainComplex& C) {
  std::vector<int> out;
  for (int n = 2; n <= C.topDegree(); ++n) {
    SparseBoundary P = C.boundaries[n - 1] * C.boundaries[n];
    P.prune([](Eigen::Index, Eigen::Index, const std::int64_t& v) { return v != 0; });
    if (P.nonZeros() != 0) out.push_back(n);
  }
  return out;
}

std::string toString(const HomologyGroup& H) {
  std::vector<std::string> parts;
  if (H.betti == 1) parts.push_back("Z");
  if (H.betti > 1) parts.push_back("Z^" + std::to_string(H.betti));
  for (const auto& t : H.torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

HomologyGroup homology(const ChainComplex& C, int n) {
  if (n < 0 || n + 1 > C.topDegree()) throw RangeError("homology degree " + std::to_string(n) + " is not certified");
  return groupFrom(C.ranks[n], sparseInvariants(C.boundaries[n]), sparseInvariants(C.boundaries[n + 1]));
}

std::vector<HomologyGroup> homologyUpTo(const ChainComplex& C, int d) {
  if (d < 0 || d + 1 > C.topDegree()) throw RangeError("homology degree " + std::to_string(d) + " is not certified");
  auto inv = boundaryInvariants(C, d + 1);
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= d; ++n) out.push_back(groupFrom(C.ranks[n], inv[n], inv[n + 1]));
  return out;
}

SparseBoundary chainMap(const SimplicialMap& f, int n) {
  if (n < 0 || n > f.maxDim()) throw RangeError("chain map requested above the map's truncation");
  const auto cols = static_cast<Eigen::Index>(f.source()->generatorCount(n));
  std::vector<Eigen::Triplet<std::int64_t>> t;
  for (Eigen::Index k = 0; k < cols; ++k) {
    const Simplex& y = f.image(n, static_cast<GeneratorIndex>(k));
    if (y.nondegenerate()) t.emplace_back(y.generator, k, 1);
  }
  return fromTriplets(static_cast<Eigen::Index>(f.target()->generatorCount(n)), cols, t);
}

// ---------------------------------------------------------------------------

namespace {

IntegerMatrix toDense(const SparseBoundary& M) {
  IntegerMatrix out = IntegerMatrix::Zero(M.rows(), M.cols());
  for (Eigen::Index j = 0; j < M.outerSize(); ++j)
    for (SparseBoundary::InnerIterator it(M, j); it; ++it) out(it.row(), j) = Integer(static_cast<long>(it.value()));
  return out;
}

// Smith bases of H_n: cycles representing each summand and coordinates of cycles.
struct HomologyBasis {
  HomologyGroup group;
  IntegerMatrix kernelBasis;      // C_n coordinates, one column per kernel generator
  IntegerMatrix kernelCoords;     // rows of V^-1 below the rank of d_n
  IntegerMatrix Uq, UqInv;        // Smith transform of the boundary lattice in kernel coordinates
  std::vector<Eigen::Index> summands;  // indices into the Smith basis: torsion first, then free
  std::vector<Integer> orders;         // 0 for free summands

  IntegerVector coordinates(const IntegerVector& cycle) const {
    IntegerVector w = Uq * (kernelCoords * cycle);
    IntegerVector out(static_cast<Eigen::Index>(summands.size()));
    for (std::size_t s = 0; s < summands.size(); ++s) {
      Integer v = w(summands[s]);
      if (orders[s] != 0) {
        v %= orders[s];
        if (v < 0) v += orders[s];
      }
      out(static_cast<Eigen::Index>(s)) = v;
    }
    return out;
  }

  IntegerVector representative(std::size_t s) const { return kernelBasis * UqInv.col(summands[s]); }
};

HomologyBasis homologyBasis(const ChainComplex& C, int n) {
  const IntegerMatrix dn = toDense(C.boundaries[n]);
  const IntegerMatrix dn1 = toDense(C.boundaries[n + 1]);
  auto s1 = smithNormalForm(dn);
  const Eigen::Index r = s1.rank, m = C.ranks[n], k = m - r;
  HomologyBasis b;
  b.kernelBasis = s1.V.rightCols(k);
  b.kernelCoords = s1.Vinv.bottomRows(k);
  const IntegerMatrix A = b.kernelCoords * dn1;
  auto s2 = smithNormalForm(A);
  b.Uq = s2.U;
  b.UqInv = s2.Uinv;
  for (Eigen::Index i = 0; i < s2.rank; ++i)
    if (s2.D(i, i) != 1) {
      b.summands.push_back(i);
      b.orders.push_back(s2.D(i, i));
      b.group.torsion.push_back(s2.D(i, i));
    }
  for (Eigen::Index i = s2.rank; i < k; ++i) {
    b.summands.push_back(i);
    b.orders.push_back(0);
  }
  b.group.betti = k - s2.rank;
  return b;
}

// A homomorphism between isomorphic finitely generated groups is an isomorphism
// iff it is surjective.
bool surjective(const IntegerMatrix& M, const std::vector<Integer>& targetOrders) {
  const Eigen::Index rows = M.rows();
  if (rows == 0) return true;
  IntegerMatrix aug = IntegerMatrix::Zero(rows, M.cols() + rows);
  aug.leftCols(M.cols()) = M;
  for (Eigen::Index i = 0; i < rows; ++i) aug(i, M.cols() + i) = targetOrders[static_cast<std::size_t>(i)];
  auto snf = smithNormalForm(aug, false);
  if (snf.rank != rows) return false;
  for (Eigen::Index i = 0; i < rows; ++i)
    if (snf.D(i, i) != 1) return false;
  return true;
}

}  // namespace

InducedMap inducedHomologyMap(const SimplicialMap& f, int n, Eigen::Index denseLimit) {
  const int top = std::min({f.source()->maxDim(), f.target()->maxDim(), f.maxDim()});
  if (n < 0 || n + 1 > top) throw RangeError("induced map degree " + std::to_string(n) + " is not certified");
  auto CX = normalizedChains(*f.source(), n + 1);
  auto CY = normalizedChains(*f.target(), n + 1);
  for (int k = std::max(0, n - 1); k <= n + 1; ++k)
    if (CX.ranks[k] > denseLimit || CY.ranks[k] > denseLimit)
      throw RangeError("induced map: chain groups exceed the dense limit");
  auto bx = homologyBasis(CX, n);
  auto by = homologyBasis(CY, n);
  const IntegerMatrix fn = toDense(chainMap(f, n));
  InducedMap out;
  out.source = bx.group;
  out.target = by.group;
  out.matrix = IntegerMatrix::Zero(static_cast<Eigen::Index>(by.summands.size()),
                                   static_cast<Eigen::Index>(bx.summands.size()));
  for (std::size_t s = 0; s < bx.summands.size(); ++s)
    out.matrix.col(static_cast<Eigen::Index>(s)) = by.coordinates(fn * bx.representative(s));
  out.isomorphism = out.source == out.target && surjective(out.matrix, by.orders);
  return out;
}

// ---------------------------------------------------------------------------

Components pi0(const SimplicialSet& X) {
  UnionFind uf(X.generatorCount(0));
  if (X.maxDim() >= 1)
    for (GeneratorIndex e = 0; e < static_cast<GeneratorIndex>(X.generatorCount(1)); ++e)
      uf.unite(static_cast<std::size_t>(X.generatorFace(1, e, 0).generator),
               static_cast<std::size_t>(X.generatorFace(1, e, 1).generator));
  Components c;
  c.label = uf.labels();
  c.count = c.label.empty() ? 0 : *std::max_element(c.label.begin(), c.label.end()) + 1;
  return c;
}

bool pi0Bijective(const SimplicialMap& f) {
  const auto cx = pi0(*f.source());
  const auto cy = pi0(*f.target());
  if (cx.count != cy.count) return false;
  std::vector<int> hit(static_cast<std::size_t>(cy.count), -1);
  for (GeneratorIndex v = 0; v < static_cast<GeneratorIndex>(f.source()->generatorCount(0)); ++v) {
    const int a = cx.label[v];
    const int b = cy.label[f.image(0, v).generator];
    if (hit[b] >= 0 && hit[b] != a) return false;
    hit[b] = a;
  }
  return std::all_of(hit.begin(), hit.end(), [](int h) { return h >= 0; });
}

GroupPresentation edgePathGroup(const SimplicialSet& X, GeneratorIndex basepoint) {
  if (X.maxDim() < 2) throw RangeError("edge-path group needs the 2-skeleton");
  if (basepoint < 0 || static_cast<std::size_t>(basepoint) >= X.generatorCount(0))
    throw RangeError("basepoint is not a vertex");
  if (pi0(X).count != 1) throw ValidationError("edge-path group of a disconnected space");
  // Breadth-first spanning tree from the basepoint.
  const auto nv = X.generatorCount(0), ne = X.generatorCount(1);
  std::vector<std::vector<GeneratorIndex>> incident(nv);
  for (GeneratorIndex e = 0; e < static_cast<GeneratorIndex>(ne); ++e) {
    incident[X.generatorFace(1, e, 0).generator].push_back(e);
    incident[X.generatorFace(1, e, 1).generator].push_back(e);
  }
  std::vector<char> seen(nv, 0), tree(ne, 0);
  std::vector<GeneratorIndex> queue{basepoint};
  seen[basepoint] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (GeneratorIndex e : incident[queue[h]])
      for (int i = 0; i < 2; ++i) {
        const GeneratorIndex w = X.generatorFace(1, e, i).generator;
        if (!seen[w]) {
          seen[w] = 1;
          tree[e] = 1;
          queue.push_back(w);
        }
      }
  GroupPresentation P;
  std::vector<int> letter(ne, -1);
  for (GeneratorIndex e = 0; e < static_cast<GeneratorIndex>(ne); ++e)
    if (!tree[e]) {
      letter[e] = static_cast<int>(P.generators.size());
      P.generators.push_back(X.name(1, e));
    }
  for (GeneratorIndex t = 0; t < static_cast<GeneratorIndex>(X.generatorCount(2)); ++t) {
    std::vector<std::pair<int, int>> word;
    auto push = [&](int i, int exponent) {
      const Simplex& f = X.generatorFace(2, t, i);
      if (f.nondegenerate() && letter[f.generator] >= 0) word.emplace_back(letter[f.generator], exponent);
    };
    push(2, 1);
    push(0, 1);
    push(1, -1);
    P.relations.push_back(std::move(word));
  }
  return P;
}

AbelianInvariants abelianizedInvariants(const GroupPresentation& P) {
  const auto g = static_cast<Eigen::Index>(P.generators.size());
  IntegerMatrix M = IntegerMatrix::Zero(static_cast<Eigen::Index>(P.relations.size()), g);
  for (std::size_t r = 0; r < P.relations.size(); ++r)
    for (auto [gen, e] : P.relations[r]) M(static_cast<Eigen::Index>(r), gen) += e;
  auto snf = smithNormalForm(M, false);
  AbelianInvariants out;
  out.freeRank = g - snf.rank;
  for (const auto& d : snf.invariantFactors())
    if (d != 1) out.torsion.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------

std::string toString(Certificate::Status s) {
  switch (s) {
    case Certificate::Status::Iso: return "iso";
    case Certificate::Status::NotIso: return "not-iso";
    case Certificate::Status::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

// Mapping cone of f: C_n = Y_n + X_(n-1), d(y, x) = (dy + f x, -dx).
ChainComplex mappingCone(const ChainComplex& CX, const ChainComplex& CY, const std::vector<SparseBoundary>& fn, int top) {
  ChainComplex C;
  auto xr = [&](int n) { return n < 0 ? Eigen::Index(0) : CX.ranks[n]; };
  for (int n = 0; n <= top; ++n) {
    const Eigen::Index cols = CY.ranks[n] + xr(n - 1);
    const Eigen::Index rows = n == 0 ? 0 : CY.ranks[n - 1] + xr(n - 2);
    C.ranks.push_back(cols);
    std::vector<Eigen::Triplet<std::int64_t>> t;
    if (n >= 1) {
      const auto& dy = CY.boundaries[n];
      for (Eigen::Index j = 0; j < dy.outerSize(); ++j)
        for (SparseBoundary::InnerIterator it(dy, j); it; ++it) t.emplace_back(it.row(), j, it.value());
      const auto& f = fn[static_cast<std::size_t>(n - 1)];
      for (Eigen::Index j = 0; j < f.outerSize(); ++j)
        for (SparseBoundary::InnerIterator it(f, j); it; ++it) t.emplace_back(it.row(), CY.ranks[n] + j, it.value());
    }
    if (n >= 2) {
      const auto& dx = CX.boundaries[n - 1];
      for (Eigen::Index j = 0; j < dx.outerSize(); ++j)
        for (SparseBoundary::InnerIterator it(dx, j); it; ++it)
          t.emplace_back(CY.ranks[n - 1] + it.row(), CY.ranks[n] + j, -it.value());
    }
    C.boundaries.push_back(fromTriplets(rows, cols, t));
  }
  return C;
}

constexpr Eigen::Index kExplicitFallbackLimit = 800;

}  // namespace

Certificate weakEquivalenceCertificate(const SimplicialMap& f, int d) {
  const int top = std::min({f.source()->maxDim(), f.target()->maxDim(), f.maxDim()});
  if (d < 0 || d > top - 1)
    throw RangeError("degree bound " + std::to_string(d) + " exceeds the certified range " + std::to_string(top - 1));
  Certificate cert;
  cert.degreeBound = d;
  cert.pi0Bijective = pi0Bijective(f);

  const auto CX = normalizedChains(*f.source(), d + 1);
  const auto CY = normalizedChains(*f.target(), d + 1);
  std::vector<SparseBoundary> fn;
  for (int n = 0; n <= d; ++n) fn.push_back(chainMap(f, n));
  const auto cone = mappingCone(CX, CY, fn, d + 1);
  const auto invX = boundaryInvariants(CX, d + 1);
  const auto invY = boundaryInvariants(CY, d + 1);

  bool allIso = true;
  MatrixInvariants coneLow = sparseInvariants(cone.boundaries[0]);
  for (int n = 0; n <= d; ++n) {
    Certificate::Degree deg;
    deg.degree = n;
    deg.source = groupFrom(CX.ranks[n], invX[n], invX[n + 1]);
    deg.target = groupFrom(CY.ranks[n], invY[n], invY[n + 1]);
    if (allIso) {
      const MatrixInvariants coneHigh = sparseInvariants(cone.boundaries[n + 1]);
      const HomologyGroup Hc = groupFrom(cone.ranks[n], coneLow, coneHigh);
      coneLow = coneHigh;
      const bool iso = Hc.betti == 0 && Hc.torsion.empty() && deg.source == deg.target;
      deg.status = iso ? Certificate::Status::Iso : Certificate::Status::NotIso;
    } else {
      bool small = true;
      for (int k = std::max(0, n - 1); k <= n + 1; ++k)
        small = small && CX.ranks[k] <= kExplicitFallbackLimit && CY.ranks[k] <= kExplicitFallbackLimit;
      if (deg.source != deg.target)
        deg.status = Certificate::Status::NotIso;
      else if (small)
        deg.status = inducedHomologyMap(f, n, kExplicitFallbackLimit).isomorphism ? Certificate::Status::Iso
                                                                                   : Certificate::Status::NotIso;
    }
    allIso = allIso && deg.status == Certificate::Status::Iso;
    cert.degrees.push_back(std::move(deg));
  }
  cert.verdict = cert.pi0Bijective && allIso;
  return cert;
}

Certificate omegaCertificate(const SimplicialMap& f, const GSpace& A, const GSpace& B, int d) {
  if (!sameSpace(f.source(), A.space) || !sameSpace(f.target(), B.space))
    throw ValidationError("omega certificate: map does not run between the given G-spaces");
  Certificate cert = weakEquivalenceCertificate(f, d);
  Certificate::SideCondition side{"equivariant", true, {}};
  for (int g = 0; g < A.group->order() && side.ok; ++g)
    if (!(compose(f, A.act(g)) == compose(B.act(g), f))) {
      side.ok = false;
      side.witness = "fails for " + A.group->name(g);
    }
  cert.verdict = cert.verdict && side.ok;
  cert.side = std::move(side);
  return cert;
}

Certificate sigmaCertificate(const SimplicialMap& u, const SimplicialMap& p, const SimplicialMap& q, int d) {
  if (!sameSpace(u.source(), p.source()) || !sameSpace(u.target(), q.source()) || !sameSpace(p.target(), q.target()))
    throw ValidationError("sigma certificate: structure maps do not match the morphism");
  Certificate cert = weakEquivalenceCertificate(u, d);
  Certificate::SideCondition side{"over-base", compose(q, u) == p, {}};
  if (!side.ok) {
    const auto qu = compose(q, u);
    for (int n = 0; n <= std::min(qu.maxDim(), p.maxDim()) && side.witness.empty(); ++n)
      for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(u.source()->generatorCount(n)); ++g)
        if (qu.image(n, g) != p.image(n, g)) {
          side.witness = "differs on " + u.source()->name(n, g);
          break;
        }
  }
  cert.verdict = cert.verdict && side.ok;
  cert.side = std::move(side);
  return cert;
}

}  // namespace borekit
