// Randomized property suites over the exact-arithmetic core. Seeds are fixed
// so failures reproduce; each suite draws at least 1000 cases.
#include <doctest.h>

#include <random>

#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"
#include "mubkit/mub.hpp"

using namespace mubkit;

namespace {

CyclotomicInt random_cyclotomic(std::mt19937_64& rng, unsigned long order) {
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::vector<BigInt> raw(euler_phi(order));
  for (auto& c : raw) c = coeff(rng);
  return CyclotomicInt::from_raw(order, std::move(raw));
}

unsigned long random_order(std::mt19937_64& rng) {
  static const unsigned long orders[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 18, 20, 24, 30};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(orders) - 1);
  return orders[pick(rng)];
}

}  // namespace

TEST_CASE("property: cyclotomic ring axioms (1000 cases)") {
  std::mt19937_64 rng(1);
  for (int iter = 0; iter < 1000; ++iter) {
    unsigned long n = random_order(rng);
    auto a = random_cyclotomic(rng, n);
    auto b = random_cyclotomic(rng, n);
    auto c = random_cyclotomic(rng, n);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("property: conjugation is an involution (1000 cases)") {
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 1000; ++iter) {
    auto a = random_cyclotomic(rng, random_order(rng));
    REQUIRE(a.conjugate().conjugate() == a);
  }
}

TEST_CASE("property: abs_squared is multiplicative (1000 cases)") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 1000; ++iter) {
    unsigned long n = random_order(rng);
    auto a = random_cyclotomic(rng, n);
    auto b = random_cyclotomic(rng, n);
    REQUIRE((a * b).abs_squared() == a.abs_squared() * b.abs_squared());
  }
}

TEST_CASE("property: field trace is linear (1000 cases) and balanced (exhaustive)") {
  std::mt19937_64 rng(4);
  const std::vector<std::pair<int, int>> fields = {{2, 2}, {2, 3}, {2, 4}, {3, 1},
                                                   {3, 2}, {3, 3}, {5, 2}, {7, 1}};
  std::vector<FieldContextPtr> contexts;
  for (auto [p, m] : fields) contexts.push_back(FieldContext::create(p, m));
  std::uniform_int_distribution<std::size_t> pick(0, contexts.size() - 1);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto& ctx = contexts[pick(rng)];
    std::uniform_int_distribution<long> idx(0, ctx->size() - 1);
    FieldElement a = ctx->element(idx(rng));
    FieldElement b = ctx->element(idx(rng));
    int p = ctx->characteristic();
    REQUIRE(trace(a + b) == (trace(a) + trace(b)) % p);
    std::uniform_int_distribution<int> scalar(0, p - 1);
    int c = scalar(rng);
    REQUIRE(trace(ctx->from_coeffs({c}) * a) == (c * trace(a)) % p);
  }
  for (const auto& ctx : contexts) {
    std::vector<long> counts(static_cast<std::size_t>(ctx->characteristic()), 0);
    for (long i = 0; i < ctx->size(); ++i)
      ++counts[static_cast<std::size_t>(trace(ctx->element(i)))];
    for (long c : counts) REQUIRE(c == ctx->size() / ctx->characteristic());
  }
}

TEST_CASE("property: Frobenius automorphism laws in GR(4^m) (1000 cases)") {
  std::mt19937_64 rng(5);
  std::vector<RingContextPtr> contexts = {RingContext::create(1), RingContext::create(2),
                                          RingContext::create(3)};
  std::uniform_int_distribution<std::size_t> pick(0, contexts.size() - 1);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto& ctx = contexts[pick(rng)];
    std::uniform_int_distribution<long> idx(0, ctx->size() - 1);
    RingElement a = ctx->element(idx(rng));
    RingElement b = ctx->element(idx(rng));
    REQUIRE(ctx->frobenius(a + b) == ctx->frobenius(a) + ctx->frobenius(b));
    REQUIRE(ctx->frobenius(a * b) == ctx->frobenius(a) * ctx->frobenius(b));
    REQUIRE(ctx->ring_trace(ctx->frobenius(a)) == ctx->ring_trace(a));
    REQUIRE(ctx->ring_trace(a + b) == (ctx->ring_trace(a) + ctx->ring_trace(b)) % 4);
  }
}

TEST_CASE("property: tensor products preserve orthonormality and unbiasedness (1000 cases)") {
  std::mt19937_64 rng(6);
  // Pools of verified bases in dimensions 2..4.
  std::vector<std::vector<Basis>> pools;
  for (std::size_t d : {2, 3, 4}) {
    MubSet s = mub_auto(d);
    pools.push_back(s.bases());
  }
  std::uniform_int_distribution<std::size_t> pick_pool(0, pools.size() - 1);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto& left_pool = pools[pick_pool(rng)];
    const auto& right_pool = pools[pick_pool(rng)];
    std::uniform_int_distribution<std::size_t> pick_left(0, left_pool.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_right(0, right_pool.size() - 1);
    std::size_t la = pick_left(rng), lb = pick_left(rng);
    std::size_t ra = pick_right(rng), rb = pick_right(rng);

    Basis t1 = tensor_product(left_pool[la], right_pool[ra]);
    REQUIRE(t1.is_orthonormal());
    if (la != lb && ra != rb) {
      Basis t2 = tensor_product(left_pool[lb], right_pool[rb]);
      REQUIRE(verify_unbiased_pair(t1, t2));
    }
  }
}
