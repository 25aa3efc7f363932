#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kindep/omega.hpp"
#include "kindep/order_lab.hpp"
#include "oracles.hpp"

#include <set>

using namespace kindep;

namespace {

// sigma(D) - sigma(E) as a map z -> difference, for z >= 1
std::map<Degree, Count> sigma_delta(const DegreeSequence & d, const DegreeSequence & e)
{
    std::map<Degree, Count> out;
    Degree top = std::max(d.empty() ? 0 : d.max(), e.empty() ? 0 : e.max()) + 2;
    for (Degree z = 1; z <= top; ++z)
        if (auto diff = d.sigma(z) - e.sigma(z); diff != 0)
            out[z] = diff;
    return out;
}

// All (kind, x, y) triples allowed by the step definitions, found by brute
// force over a generous range instead of the library's own generator.
std::set<DegreeSequence> brute_successors(const DegreeSequence & e, Degree k)
{
    std::set<DegreeSequence> out;
    Degree top = e.max() + 2;
    for (Degree x = 1; x <= top; ++x)
        for (Degree y = 1; y <= top; ++y) {
            try {
                out.insert(addition_step(e, x, y));
            }
            catch (const InvalidInput &) {
            }
            try {
                out.insert(transfer_step(e, x, y, k));
            }
            catch (const InvalidInput &) {
            }
        }
    return out;
}

}

TEST_CASE("decrements and increments")
{
    CHECK(apply_decrement({1, 2, 2, 4, 4, 5}, 5) == DegreeSequence{1, 2, 2, 4, 4, 4});
    CHECK(apply_decrement({1}, 1) == DegreeSequence{0});
    CHECK_THROWS_AS(apply_decrement({1, 2}, 3), InvalidInput);
    CHECK_THROWS_AS(apply_decrement({0, 2}, 0), InvalidInput);

    CHECK(apply_increment({1, 2, 2, 4, 4, 5, 6}, 2) == DegreeSequence{1, 2, 3, 4, 4, 5, 6});
    CHECK(apply_increment({0}, 0) == DegreeSequence{1});
    CHECK_THROWS_AS(apply_increment({1, 2}, 3), InvalidInput);
}

TEST_CASE("sigma identities for single moves")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        auto v = oracle::random_graphical(rng, 8, 30);
        auto e = oracle::to_seq(v);
        Degree x = v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
        auto up = apply_increment(e, x);
        CHECK(sigma_delta(up, e) == std::map<Degree, Count>{{x + 1, 1}});
        CHECK(apply_decrement(up, x + 1) == e);
        if (x > 0)
            CHECK(sigma_delta(apply_decrement(e, x), e) == std::map<Degree, Count>{{x, -1}});
    }
}

TEST_CASE("worked step examples")
{
    CHECK(addition_step({1, 2, 2, 4, 4, 5, 6}, 3, 7) == DegreeSequence{1, 2, 3, 4, 4, 5, 7});
    CHECK(transfer_step({0, 1, 2, 3, 3, 3}, 1, 3, 3) == DegreeSequence{0, 0, 3, 3, 3, 3});
    CHECK(addition_step({0, 0}, 1, 1) == DegreeSequence{1, 1});
    // x > max(k, y): a unit moves from a 5 onto a 0
    auto moved = transfer_step({0, 2, 3, 5}, 5, 1, 3);
    CHECK(moved == DegreeSequence{1, 2, 3, 4});
    CHECK(sigma_delta(moved, {0, 2, 3, 5}) == std::map<Degree, Count>{{1, 1}, {5, -1}});

    CHECK_THROWS_AS(transfer_step({2, 2}, 2, 2, 3), InvalidInput);
    CHECK_THROWS_AS(addition_step({1, 2}, 3, 2), InvalidInput);
    CHECK_THROWS_AS(addition_step({1, 2}, 1, 4), InvalidInput);
    CHECK_THROWS_AS(addition_step({1, 2}, 4, 4), InvalidInput);
    CHECK(to_string({StepKind::Addition, 3, 7}) == "(3,7)-addition");
}

TEST_CASE("step sigma identities and the successor generator")
{
    for (Degree k = 1; k <= 3; ++k) {
        oracle::for_each_graphical(5, 12, [&](const oracle::Values & v) {
            auto e = oracle::to_seq(v);
            if (e.all_zero())
                return;
            std::set<DegreeSequence> generated;
            for (const auto & [step, d] : elementary_successors(e, k)) {
                generated.insert(d);
                CHECK(apply_step(e, step, k) == d);
                std::map<Degree, Count> expect;
                if (step.kind == StepKind::Addition) {
                    ++expect[step.x];
                    ++expect[step.y];
                    CHECK(d.sum() == e.sum() + 2);
                    CHECK(d.max() <= e.max() + 1);
                }
                else {
                    --expect[step.x];
                    ++expect[step.y];
                    CHECK(d.sum() == e.sum());
                    // a transfer with x < y <= k can only raise the max when E is trivial
                    if (! is_trivial(e, k))
                        CHECK(d.max() <= e.max());
                }
                std::erase_if(expect, [](const auto & kv) { return kv.second == 0; });
                CHECK_MESSAGE(sigma_delta(d, e) == expect, e.str(), " ", to_string(step));
                CHECK(one_step_below(d, e, k));
            }
            CHECK(generated == brute_successors(e, k));
        });
    }
}

TEST_CASE("precedence")
{
    CHECK(precedes({1, 2, 2}, {1, 2, 2}, 2));
    CHECK(precedes({1, 2, 3, 4, 4, 5, 7}, {1, 2, 2, 4, 4, 5, 6}, 3));
    CHECK(precedes({0, 0, 3, 3, 3, 3}, {0, 1, 2, 3, 3, 3}, 3));
    // sum decreases or parity changes: never reachable
    CHECK_FALSE(precedes({1, 1}, {2, 2}, 1));
    CHECK_FALSE(precedes({1, 2}, {1, 1}, 1));
    CHECK_THROWS_AS(precedes({1, 1}, {1, 1, 0}, 1), InvalidInput);

    PrecedenceLimits tight;
    tight.max_order = 3;
    CHECK_THROWS_AS(precedes({1, 1, 2, 2}, {1, 1, 1, 1}, 1, tight), ResourceLimit);
}

TEST_CASE("precedence is reachability under one_step_below")
{
    // two steps from {0,0,0}: (1,1)-addition, then (2,2)- or (1,2)-addition
    CHECK(precedes({2, 2, 0}, {0, 0, 0}, 1));
    CHECK(precedes({1, 1, 2}, {0, 0, 0}, 1));

    // transitivity sample
    DegreeSequence e{1, 1, 2}, mid = addition_step(e, 2, 3);
    auto low = addition_step(mid, 2, 4);
    CHECK(precedes(mid, e, 2));
    CHECK(precedes(low, mid, 2));
    CHECK(precedes(low, e, 2));
}

TEST_CASE("pseudo-reductions")
{
    CHECK(pseudo_reductions({1, 1, 2}, 1) == std::vector<DegreeSequence>{{0, 0}});
    CHECK(pseudo_reductions({2, 2, 2}, 1) == std::vector<DegreeSequence>{{1, 1}});

    auto list = pseudo_reductions({1, 2, 2, 4, 4, 5, 6}, 3);
    CHECK(std::find(list.begin(), list.end(), DegreeSequence{0, 1, 2, 3, 3, 3}) != list.end());
    CHECK_THROWS_AS(pseudo_reductions({1, 1}, 3), InvalidInput);
}

TEST_CASE("pseudo-reductions match a brute-force filter")
{
    for (Degree k = 1; k <= 3; ++k) {
        oracle::for_each_graphical(6, 14, [&](const oracle::Values & v) {
            auto e = oracle::to_seq(v);
            if (is_trivial(e, k))
                return;
            oracle::Values a0(v.begin(), v.end() - 1);
            Degree target = oracle::total(a0) - v.back();
            std::set<DegreeSequence> expect;
            if (target >= 0) {
                oracle::for_each_sequence(static_cast<int>(a0.size()), target, target, [&](const oracle::Values & w) {
                    if (static_cast<std::size_t>(w.size()) != a0.size() || oracle::total(w) != target)
                        return;
                    if (! oracle::graphical(w))
                        return;
                    for (Degree z = 1; z <= target; ++z)
                        if (oracle::count_at_least(w, z) > oracle::count_at_least(a0, z))
                            return;
                    expect.insert(oracle::to_seq(w));
                });
                if (a0.empty() && target == 0)
                    expect.insert(DegreeSequence{});
            }
            auto got = pseudo_reductions(e, k);
            CHECK_MESSAGE(std::set<DegreeSequence>(got.begin(), got.end()) == expect, e.str());
            CHECK(std::is_sorted(got.begin(), got.end()));
            // Omega(E) is a reduction unless degenerate, so it must appear
            auto om = omega(e, k);
            if (! om.all_zero())
                CHECK(std::find(got.begin(), got.end(), om) != got.end());
        });
    }
}

TEST_CASE("worked instance: Omega commutes with the example steps")
{
    DegreeSequence e{1, 2, 2, 4, 4, 5, 6};
    auto d = addition_step(e, 3, 7);
    auto e1 = omega(e, 3), d1 = omega(d, 3);
    CHECK(e1 == DegreeSequence{0, 1, 2, 3, 3, 3});
    CHECK(d1 == transfer_step(e1, 1, 3, 3));
    CHECK(one_step_below(d1, e1, 3));
}
