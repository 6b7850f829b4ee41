#pragma once

#include <string>
#include <utility>
#include <vector>

namespace liesym {

struct VerificationWitness {
  std::string input;
  std::string expected;
  std::string got;
};

/// Outcome of one executable check.  Deterministic given (target, params):
/// the seed is part of params.  status is fail exactly when witnesses exist.
struct VerificationReport {
  std::string target;
  std::vector<std::pair<std::string, long long>> params;
  bool pass = true;
  long long checks_run = 0;
  std::vector<VerificationWitness> witnesses;
  long long elapsed_ms = 0;

  void record_failure(std::string input, std::string expected, std::string got);

  std::string to_text() const;
  /// {"target", "params", "status", "checks_run", "witnesses", "elapsed_ms"}.
  std::string to_json_string() const;
};

struct VerifyOptions {
  unsigned long long seed = 1;
  /// Negative control: corrupt one hypothesis; the verifier must then fail.
  bool mutate = false;
  /// Symmetry checks run over all n! permutations instead of the generators.
  bool paranoid = false;
};

/// psi_u preserves every symmetric element iff u is a symmetric element of
/// the commutator ideal.  Forward: random symmetric u pass the preservation
/// check.  Converse: for random non-symmetric u the element x_1+...+x_n
/// already exposes the failure.
VerificationReport verify_inner_metabelian(int n, int dmax, int trials,
                                           const VerifyOptions& opt = {});

/// With v = x_1+...+x_n, the linear u with [u,v] symmetric are exactly the
/// scalar multiples of v: the exact nullspace of the constraint system is
/// one-dimensional and spanned by the all-ones vector.
VerificationReport verify_lemma_linear(int n, const VerifyOptions& opt = {});

/// eps_u on the class-c quotient preserves every symmetric element iff u is
/// symmetric modulo the top graded piece.  Converse failures are exposed by
/// x_1+...+x_n: through its degree-2 component when the linear part of u is
/// non-symmetric, in higher degree otherwise.
VerificationReport verify_inner_nilpotent(int n, int c, int dmax, int trials,
                                          const VerifyOptions& opt = {});

/// The symmetric-preserving linear maps of the rank-2 free algebra are the
/// maps x -> ax+by, y -> bx+ay with a^2 != b^2: such maps pass, every other
/// invertible linear map is exposed by x+y or [[x,y],x]-[[x,y],y], the
/// stated inverse formula holds, and the image identity
/// [[x,y],x]-[[x,y],y] -> (ad-bc)((a-c)[[x,y],x]+(b-d)[[x,y],y]) is exact.
VerificationReport verify_aut_l2(int dmax, int samples, const VerifyOptions& opt = {});

/// Composites xi(a,b) o psi_u with symmetric u preserve symmetric elements,
/// and (a, b, u) can be recovered exactly from the composite's images.
VerificationReport verify_corollary_f2(int dmax, int samples, const VerifyOptions& opt = {});

/// Maps x -> x+[x,y]f, y -> y+[x,y]g: random instances with g = -f(y,x)
/// preserve symmetric elements of the class-c quotient, and an exhaustive
/// search over small coefficients finds that the maps preserving both proof
/// witnesses are exactly those with g = -f(y,x).
VerificationReport verify_phi_l2c(int c, int fdeg, const VerifyOptions& opt = {});

}  // namespace liesym
