#include <doctest.h>

#include <optional>

#include "mubkit/entangle.hpp"

using namespace mubkit;

namespace {

// Two-particle state sum_n zeta^{exps[n]} |n, n+h mod d> in the left-major
// flat convention, as the listings quote them.
StateVector two_particle(unsigned long order, std::size_t d, std::size_t h,
                         const std::vector<int>& exps) {
  std::vector<CyclotomicInt> entries(d * d, CyclotomicInt::zero(order));
  for (std::size_t n = 0; n < d; ++n)
    entries[n * d + (n + h) % d] = CyclotomicInt::root_of_unity(order, exps[n]);
  return StateVector(std::move(entries), static_cast<long long>(d));
}

std::size_t nonzero_count(const StateVector& v) {
  std::size_t count = 0;
  for (const auto& e : v.entries())
    if (!e.is_zero()) ++count;
  return count;
}

}  // namespace

TEST_CASE("bell_basis(2) gives the four textbook Bell states") {
  BellFamily f = bell_basis(2);
  REQUIRE(f.shift_count() == 2);
  REQUIRE(f.layer_count() == 1);
  CHECK(f.state(0, 0, 0) == two_particle(2, 2, 0, {0, 0}));  // |00> + |11>
  CHECK(f.state(0, 0, 1) == two_particle(2, 2, 0, {0, 1}));  // |00> - |11>
  CHECK(f.state(1, 0, 0) == two_particle(2, 2, 1, {0, 0}));  // |01> + |10>
  CHECK(f.state(1, 0, 1) == two_particle(2, 2, 1, {0, 1}));  // |01> - |10>
  CHECK(verify_bell_family(f).pass);
}

TEST_CASE("bell_basis structure: d nonzero unimodular entries per state") {
  BellFamily f = bell_basis(3);
  for (std::size_t h = 0; h < 3; ++h)
    for (std::size_t k = 0; k < 3; ++k) {
      const StateVector& v = f.state(h, 0, k);
      CHECK(nonzero_count(v) == 3);
      for (const auto& e : v.entries())
        if (!e.is_zero()) CHECK(e.abs_squared() == CyclotomicInt::from_integer(v.order(), 1));
    }
}

TEST_CASE("bell_basis(5): 25 exactly orthonormal states") {
  BellFamily f = bell_basis(5);
  BellReport r = verify_bell_family(f);
  CHECK(r.pass);
  // Exhaustive cross-check of global orthonormality over all 25 states.
  std::vector<const StateVector*> all;
  for (std::size_t h = 0; h < 5; ++h)
    for (std::size_t k = 0; k < 5; ++k) all.push_back(&f.state(h, 0, k));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto ip = raw_inner_product(*all[i], *all[j]).as_integer();
      REQUIRE(ip.has_value());
      CHECK(*ip == (i == j ? BigInt(5) : BigInt(0)));
    }
}

TEST_CASE("bell_even(1) equals the refined two-qubit array") {
  BellFamily f = bell_even(1);
  REQUIRE(f.shift_count() == 2);
  REQUIRE(f.layer_count() == 2);
  // Lines of the array: (|00>+-|11>; |01>+-|10>), then the i-phased row.
  CHECK(f.state(0, 0, 0) == two_particle(4, 2, 0, {0, 0}));
  CHECK(f.state(0, 0, 1) == two_particle(4, 2, 0, {0, 2}));
  CHECK(f.state(1, 0, 0) == two_particle(4, 2, 1, {0, 0}));
  CHECK(f.state(1, 0, 1) == two_particle(4, 2, 1, {0, 2}));
  CHECK(f.state(0, 1, 0) == two_particle(4, 2, 0, {0, 1}));   // |00> + i|11>
  CHECK(f.state(0, 1, 1) == two_particle(4, 2, 0, {0, 3}));   // |00> - i|11>
  CHECK(f.state(1, 1, 0) == two_particle(4, 2, 1, {0, 1}));   // |01> + i|10>
  CHECK(f.state(1, 1, 1) == two_particle(4, 2, 1, {0, 3}));   // |01> - i|10>
  CHECK(verify_bell_family(f).pass);
}

TEST_CASE("bell_even(2) reproduces the quoted quartit vectors") {
  BellFamily f = bell_even(2);
  REQUIRE(f.shift_count() == 4);
  REQUIRE(f.layer_count() == 4);

  const std::vector<std::vector<int>> a0 = {
      {0, 0, 0, 0}, {0, 0, 2, 2}, {0, 2, 2, 0}, {0, 2, 0, 2}};
  const std::vector<std::vector<int>> a1 = {
      {0, 2, 3, 3}, {0, 2, 1, 1}, {0, 0, 1, 3}, {0, 0, 3, 1}};
  for (std::size_t b = 0; b < 4; ++b) {
    CHECK(f.state(0, 0, b) == two_particle(4, 4, 0, a0[b]));
    CHECK(f.state(0, 1, b) == two_particle(4, 4, 0, a1[b]));
    CHECK(f.state(1, 0, b) == two_particle(4, 4, 1, a0[b]));
    CHECK(f.state(1, 1, b) == two_particle(4, 4, 1, a1[b]));
    CHECK(f.state(2, 0, b) == two_particle(4, 4, 2, a0[b]));
    CHECK(f.state(3, 0, b) == two_particle(4, 4, 3, a0[b]));
  }
  CHECK(verify_bell_family(f).pass);
}

TEST_CASE("bell_odd(3,1): the a=0 layer is the Fourier Bell triplet") {
  BellFamily refined = bell_odd(3, 1);
  BellFamily plain = bell_basis(3);
  REQUIRE(refined.layer_count() == 3);
  for (std::size_t h = 0; h < 3; ++h)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(refined.state(h, 0, b) ==
            plain.state(h, 0, b).rescale_order(refined.state(h, 0, b).order()));
  CHECK(verify_bell_family(refined).pass);
}

TEST_CASE("bell_odd(3,2): d=9 within-shift unbiasedness at level 1/sqrt(9)") {
  BellFamily f = bell_odd(3, 2);
  REQUIRE(f.shift_count() == 9);
  REQUIRE(f.layer_count() == 9);
  // Spot the two shifts 0 and 4: orthonormality per layer and the exact
  // overlap |<.|.>|^2 = 81/9 = 9 across layers.
  for (std::size_t h : {std::size_t{0}, std::size_t{4}}) {
    for (std::size_t a = 0; a < 9; ++a) {
      for (std::size_t b = 0; b < 9; ++b) {
        for (std::size_t b2 = b; b2 < 9; ++b2) {
          auto ip = raw_inner_product(f.state(h, a, b), f.state(h, a, b2)).as_integer();
          REQUIRE(ip.has_value());
          CHECK(*ip == (b == b2 ? BigInt(9) : BigInt(0)));
        }
        for (std::size_t a2 = a + 1; a2 < 9; ++a2)
          for (std::size_t b2 = 0; b2 < 9; ++b2) {
            CyclotomicInt ip = raw_inner_product(f.state(h, a, b), f.state(h, a2, b2));
            CHECK(ip.abs_squared() == CyclotomicInt::from_integer(ip.order(), 9));
          }
      }
    }
  }
  // Representative cross-shift orthogonality (disjoint supports).
  CHECK(raw_inner_product(f.state(0, 3, 5), f.state(7, 2, 1)).is_zero());
}

TEST_CASE("the omega_d reading of the odd Bell exponent breaks orthonormality at d=9") {
  // Rebuilding the d=9 layer a=0, h=0 with exponents on omega_9 instead of
  // omega_3: the trace lands in Z_3, so vectors use only zeta_9^{0,1,2} and
  // the partial basis stops being orthogonal.
  auto ctx = FieldContext::create(3, 2);
  std::vector<StateVector> layer;
  for (long bi = 0; bi < 9; ++bi) {
    std::vector<CyclotomicInt> entries(81, CyclotomicInt::zero(9));
    for (long ni = 0; ni < 9; ++ni) {
      int t = trace((ctx->element(0) * ctx->element(ni) + ctx->element(bi)) * ctx->element(ni));
      entries[static_cast<std::size_t>(ni) * 9 + static_cast<std::size_t>(ni)] =
          CyclotomicInt::root_of_unity(9, t);
    }
    layer.emplace_back(std::move(entries), 9);
  }
  bool all_orthogonal = true;
  for (std::size_t i = 0; i < layer.size() && all_orthogonal; ++i)
    for (std::size_t j = i + 1; j < layer.size() && all_orthogonal; ++j) {
      auto ip = raw_inner_product(layer[i], layer[j]);
      if (!ip.is_zero()) all_orthogonal = false;
    }
  CHECK_FALSE(all_orthogonal);
}

TEST_CASE("bell_composite(6) reproduces the quoted d=6 vectors") {
  BellFamily f = bell_composite(6);
  REQUIRE(f.shift_count() == 6);
  REQUIRE(f.layer_count() == 2);

  // h=0, first layer: all-ones and the omega_3 pattern (exponents on z12).
  CHECK(f.state(0, 0, 0) == two_particle(12, 6, 0, {0, 0, 0, 0, 0, 0}));
  CHECK(f.state(0, 0, 1) == two_particle(12, 6, 0, {0, 4, 8, 0, 4, 8}));
  // h=0, second layer: |00> + w|11> + w|22> + i|33> + iw|44> + iw|55>.
  CHECK(f.state(0, 1, 0) == two_particle(12, 6, 0, {0, 4, 4, 3, 7, 7}));
  // h=1, first layer first vectors.
  CHECK(f.state(1, 0, 0) == two_particle(12, 6, 1, {0, 0, 0, 0, 0, 0}));
  CHECK(f.state(1, 0, 1) == two_particle(12, 6, 1, {0, 4, 8, 0, 4, 8}));
  CHECK(verify_bell_family(f).pass);
}

TEST_CASE("partial traces") {
  // Product state |00> in d=2: reduction diag(1, 0).
  std::vector<CyclotomicInt> prod(4, CyclotomicInt::zero(1));
  prod[0] = CyclotomicInt::from_integer(1, 1);
  StateVector v00(prod, 1);
  ExactMatrix rho = partial_trace_second(v00);
  CHECK(rho.entry(0, 0) == CyclotomicInt::from_integer(1, 1));
  CHECK(rho.entry(1, 1).is_zero());
  CHECK_FALSE(is_maximally_mixed(rho, 2, 1));

  BellFamily f2 = bell_basis(2);
  CHECK(is_maximally_mixed(partial_trace_second(f2.state(0, 0, 0)), 2, 2));

  BellFamily f3 = bell_basis(3);
  ExactMatrix rho3 = partial_trace_second(f3.state(1, 0, 2));
  CHECK(is_maximally_mixed(rho3, 3, 3));

  // Swap symmetry at h = 0.
  for (std::size_t b = 0; b < 3; ++b)
    CHECK(is_maximally_mixed(partial_trace_first(f3.state(0, 0, b), 3, 3), 3, 3));

  // Non-square dimension requires an explicit split.
  std::vector<CyclotomicInt> six(6, CyclotomicInt::zero(1));
  six[0] = CyclotomicInt::from_integer(1, 1);
  StateVector v6(six, 1);
  CHECK_THROWS_AS(partial_trace_second(v6), std::invalid_argument);
  ExactMatrix rho23 = partial_trace_second(v6, 2, 3);
  CHECK(rho23.rows() == 2);
}

TEST_CASE("reduced matrices are Hermitian with exact unit trace") {
  BellFamily f = bell_even(2);
  for (std::size_t h = 0; h < 4; ++h) {
    const StateVector& v = f.state(h, 2, 1);
    ExactMatrix rho = partial_trace_second(v, 4, 4);
    CHECK(rho.denominator() == BigInt(v.scale_sq()));
    CyclotomicInt tr_sum = CyclotomicInt::zero(rho.order());
    for (std::size_t i = 0; i < 4; ++i) {
      tr_sum += rho.entry(i, i);
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(rho.entry(i, j) == rho.entry(j, i).conjugate());
    }
    CHECK(tr_sum.as_integer() == BigInt(v.scale_sq()));
  }
}

TEST_CASE("bell projector completeness per layer") {
  for (std::size_t d : {std::size_t{2}, std::size_t{3}}) {
    BellFamily f = bell_basis(d);
    unsigned long order = f.state(0, 0, 0).order();
    ExactMatrix sum(d * d, d * d, order);
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t k = 0; k < d; ++k) {
        const StateVector& v = f.state(h, 0, k);
        for (std::size_t i = 0; i < d * d; ++i) {
          if (v.entry(i).is_zero()) continue;
          for (std::size_t j = 0; j < d * d; ++j) {
            if (v.entry(j).is_zero()) continue;
            sum.set_entry(i, j, sum.entry(i, j) + v.entry(i) * v.entry(j).conjugate());
          }
        }
      }
    for (std::size_t i = 0; i < d * d; ++i)
      for (std::size_t j = 0; j < d * d; ++j) {
        CyclotomicInt expected = i == j ? CyclotomicInt::from_integer(order, BigInt(d))
                                        : CyclotomicInt::zero(order);
        CHECK(sum.entry(i, j) == expected);
      }
  }
}

TEST_CASE("verify_bell_family flags a corrupted shift label") {
  BellFamily good = bell_basis(3);
  auto sets = good.sets();
  sets[2][0][0] = sets[1][0][0];  // state carries h=1 support under the h=2 label
  BellFamily bad(3, sets, "corrupted");
  BellReport r = verify_bell_family(bad);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.orthogonal_across_shift);
  bool found = false;
  for (const auto& failure : r.failures)
    if (failure.check == "cross_shift" && failure.h_a == 1 && failure.h_b == 2) found = true;
  CHECK(found);
}

TEST_CASE("verify_bell_family passes for d in 2..6") {
  CHECK(verify_bell_family(bell_even(1)).pass);
  CHECK(verify_bell_family(bell_odd(3, 1)).pass);
  CHECK(verify_bell_family(bell_even(2)).pass);
  CHECK(verify_bell_family(bell_odd(5, 1)).pass);
  CHECK(verify_bell_family(bell_composite(6)).pass);
}

TEST_CASE("the within-shift overlap level is parameterized") {
  BellFamily f = bell_even(1);
  CHECK(verify_bell_family(f, 2).pass);
  BellReport wrong = verify_bell_family(f, 4);  // wrong sector dimension
  CHECK_FALSE(wrong.pass);
  CHECK_FALSE(wrong.unbiased_within_shift);
  CHECK(wrong.orthonormal);
}

TEST_CASE("refined a-slices are complete bases of the doubled space") {
  BellFamily f = bell_even(1);
  const std::size_t d = 2;
  for (std::size_t a = 0; a < 2; ++a) {
    unsigned long order = f.state(0, a, 0).order();
    ExactMatrix sum(d * d, d * d, order);
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t b = 0; b < d; ++b) {
        const StateVector& v = f.state(h, a, b);
        for (std::size_t i = 0; i < d * d; ++i) {
          if (v.entry(i).is_zero()) continue;
          for (std::size_t j = 0; j < d * d; ++j) {
            if (v.entry(j).is_zero()) continue;
            sum.set_entry(i, j, sum.entry(i, j) + v.entry(i) * v.entry(j).conjugate());
          }
        }
      }
    CHECK(sum.same_matrix(ExactMatrix::identity_matrix(d * d, order).scaled(BigInt(d))));
  }
}
