#include "ipset/numtheory.hpp"

namespace ipset {

std::optional<Integer> is_perfect_square(const Integer& v) {
    if (v < 0) return std::nullopt;
    if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
    return s;
}

namespace {

struct IntegerSquarefreeParts {
    Integer square_root; ///< s in v = s^2 * k
    Integer k;           ///< squarefree
};

// Peels prime factors of v by trial division up to `bound`. The residual
// cofactor c then has no prime factor <= bound, which leaves few shapes:
//   c == 1                  -> done
//   c a perfect square t^2  -> t goes to the root (t's own factorization is
//                              irrelevant, only k must stay squarefree)
//   c <= bound^2            -> c is prime (a composite non-square with least
//                              factor > bound exceeds bound^2), so squarefree
//   c a strong probable prime -> squarefree
// Anything else cannot be certified and raises FactorizationLimitExceeded.
IntegerSquarefreeParts decompose_integer(Integer v, long bound) {
    IntegerSquarefreeParts out{1, 1};
    for (Integer f = 2; f * f <= v && f <= bound; ++f) {
        if (v % f != 0) continue;
        int e = 0;
        do {
            v /= f;
            ++e;
        } while (v % f == 0);
        for (int i = 0; i < e / 2; ++i) out.square_root *= f;
        if (e % 2 == 1) out.k *= f;
    }
    if (v == 1) return out;
    if (auto t = is_perfect_square(v)) {
        out.square_root *= *t;
        return out;
    }
    const Integer bound_sq = Integer(bound) * Integer(bound);
    if (v <= bound_sq || mpz_probab_prime_p(v.get_mpz_t(), 40) != 0) {
        out.k *= v;
        return out;
    }
    throw FactorizationLimitExceeded(
        "residual cofactor " + v.get_str() +
        " is neither a square nor certifiably squarefree at trial bound " +
        std::to_string(bound));
}

} // namespace

SquarefreeDecomposition squarefree_decompose(const Rational& q, long trial_bound) {
    if (q <= 0) throw InvalidParameter("squarefree_decompose: input must be positive");
    if (trial_bound < 2) throw InvalidParameter("squarefree_decompose: trial bound too small");
    // q = N/D = (N*D) / D^2, so decomposing the integer N*D gives
    // q = (s/D)^2 * k.
    const Integer m = q.get_num() * q.get_den();
    auto parts = decompose_integer(m, trial_bound);
    return {make_rational(parts.square_root, q.get_den()), parts.k};
}

bool is_squarefree(const Integer& v, long trial_bound) {
    if (v < 1) return false;
    auto parts = decompose_integer(v, trial_bound);
    return parts.square_root == 1;
}

} // namespace ipset
