#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "tsys/compatibility.hpp"
#include "tsys/saturation.hpp"
#include "tsys/transfer.hpp"

namespace tsys {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Shape of one connected component.
//   Vl(l):  columns 0..l, l < r
//   Hk(k):  rows 0..k, k < s
//   L(l,k): columns 0..l together with rows 0..k, l < r, k < s
//   Rectangle: the full coordinate box between lo and hi
struct ShapeTag {
  enum class Kind { Vl, Hk, L, Rectangle, Irregular };
  Kind kind = Kind::Irregular;
  int ell = -1;  // Vl / L
  int k = -1;    // Hk / L
  Vertex lo{}, hi{};  // Rectangle corners

  std::string name() const;
};

ShapeTag shape_of(const TransferSystem& t, const ComponentPartition& parts,
                  int component_id);
ShapeTag shape_of(const TransferSystem& t, int component_id);

enum class LspReason {
  Connected,
  TwoCompH0orV0,
  TwoCompThick,
  TwoCompL,
  ThreePlusComponents,
  OracleOnly,
};

std::string lsp_reason_name(LspReason r);

// Lesser simply paired: the only compatible supersets of t are hull(t)
// and the complete system. When the verdict is negative, `witness` is a
// compatible superset strictly between the two.
struct LspVerdict {
  bool is_lsp = false;
  LspReason reason = LspReason::OracleOnly;
  std::optional<TransferSystem> witness;
};

// Theorem-based decision: one component -> LSP; three or more -> not LSP
// with a witness grown from (0,0) -> (lex-smallest vertex outside the
// origin component); two components -> LSP exactly when the origin
// component is V0 or H0, otherwise a witness grown from (0,0) to the
// smallest vertex of the top component.
LspVerdict is_lsp_fast(const TransferSystem& t);

// Literal decision by enumerating all compatible supersets.
LspVerdict is_lsp_oracle(const TransferSystem& t, int max_vertices = 12);

BigInt binomial(unsigned n, unsigned k);

// Cat(n) = (2n)! / ((n+1)! n!)
BigInt catalan(unsigned n);

// A_m(3,1) = C(3m+1, m) / (3m+1)
BigInt fuss_catalan_A(unsigned m);

// Number of LSP systems on the chain with n+1 vertices: Cat(n)+Cat(n-1).
BigInt lsp_count_chain(unsigned n);

// lsp_count_chain(n) / Cat(n+1), equal to (5n^2+9n-2)/(16n^2-4).
BigRational lsp_proportion_chain(unsigned n);

// Half-up rounding of 100*x to an integer, exact.
long round_hundredths(const BigRational& x);

}  // namespace tsys
