#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "adnil/ideals.hpp"
#include "adnil/oracle.hpp"

using namespace adnil;

namespace {

RootSet set_of(const RootSystem& rs, std::initializer_list<Coords> roots) {
  RootSet s(rs.size());
  for (const auto& c : roots) s.set(rs.find(c).value());
  return s;
}

std::vector<RootSet> all_filters(const Poset& p) {
  std::vector<RootSet> out;
  AntichainGenerator gen(p);
  gen.for_each([&](const AntichainItem& item) { out.push_back(item.filter); });
  return out;
}

}  // namespace

TEST_CASE("parabolic_compatible examples", "[ideals]") {
  const auto rs = build_root_system({Kind::G, 2});
  const RootSet empty(rs.size());
  const RootSet theta = set_of(rs, {{3, 2}});
  const RootSet all = RootSet::full(rs.size());
  for (int i = 0; i < 2; ++i) {
    CHECK(parabolic_compatible(rs, empty, i));
    CHECK_FALSE(parabolic_compatible(rs, all, i));
  }
  CHECK(parabolic_compatible(rs, theta, 0));
  CHECK_FALSE(parabolic_compatible(rs, theta, 1));
}

TEST_CASE("compatibility_mask examples", "[ideals]") {
  const auto rs = build_root_system({Kind::G, 2});
  CHECK(compatibility_mask(rs, RootSet(rs.size())) == ParabolicMask::all(2));
  CHECK(compatibility_mask(rs, RootSet::full(rs.size())) == ParabolicMask::none(2));
  const RootSet phi = set_of(rs, {{3, 2}, {3, 1}, {2, 1}, {1, 1}, {0, 1}});
  CHECK(compatibility_mask(rs, phi) == ParabolicMask(2, 0b01));
}

TEST_CASE("is_abelian examples", "[ideals]") {
  const auto rs = build_root_system({Kind::G, 2});
  CHECK(is_abelian(rs, RootSet(rs.size())));
  CHECK(is_abelian(rs, set_of(rs, {{3, 2}})));
  CHECK_FALSE(is_abelian(rs, set_of(rs, {{3, 2}, {3, 1}, {2, 1}, {1, 1}, {0, 1}})));
}

TEST_CASE("phi_squared examples", "[ideals][oracle]") {
  const auto rs = build_root_system({Kind::G, 2});
  CHECK(oracle::phi_squared(rs, RootSet(rs.size())).empty());
  CHECK(oracle::phi_squared(rs, set_of(rs, {{3, 2}})).empty());
  CHECK(oracle::phi_squared(rs, set_of(rs, {{2, 1}, {3, 1}, {3, 2}})).empty());
  CHECK(oracle::phi_squared(rs, set_of(rs, {{3, 2}, {3, 1}, {2, 1}, {1, 1}, {0, 1}})) == set_of(rs, {{3, 2}}));
}

TEST_CASE("is_filter_for examples", "[ideals][oracle]") {
  const auto rs = build_root_system({Kind::G, 2});
  for (std::uint32_t m = 0; m < 4; ++m) CHECK(oracle::is_filter_for(rs, RootSet(rs.size()), ParabolicMask(2, m)));
  CHECK_FALSE(oracle::is_filter_for(rs, set_of(rs, {{1, 0}}), ParabolicMask::none(2)));
  CHECK_FALSE(oracle::is_filter_for(rs, set_of(rs, {{3, 2}}), ParabolicMask(2, 0b10)));
  CHECK(oracle::is_filter_for(rs, set_of(rs, {{3, 2}}), ParabolicMask(2, 0b01)));
}

TEST_CASE("ParabolicMask labels are 1-based", "[ideals]") {
  const auto m = ParabolicMask::from_labels(6, {2, 5});
  CHECK(m.bits() == 0b010010);
  CHECK(m.labels() == std::vector<int>{2, 5});
  CHECK_THROWS_AS(ParabolicMask::from_labels(2, {3}), std::out_of_range);
  CHECK_THROWS_AS(ParabolicMask::from_labels(2, {0}), std::out_of_range);
}

TEST_CASE("compatibility shortcut agrees with the literal F_I test", "[ideals][oracle]") {
  for (auto t : {SimpleType{Kind::G, 2}, SimpleType{Kind::F, 4}, SimpleType{Kind::B, 3}, SimpleType{Kind::C, 3}}) {
    const auto rs = build_root_system(t);
    const auto p = build_poset(rs);
    INFO(t.name());
    for (const RootSet& phi : all_filters(p)) {
      const ParabolicMask compat = compatibility_mask(rs, phi);
      for (std::uint32_t m = 0; m < (1U << rs.rank()); ++m) {
        const ParabolicMask I(rs.rank(), m);
        CHECK(I.is_subset_of(compat) == oracle::is_filter_for(rs, phi, I));
      }
    }
  }
}

TEST_CASE("compatibility shortcut agrees with the literal F_I test on sampled E6 filters", "[ideals][oracle]") {
  const auto rs = build_root_system({Kind::E, 6});
  const auto filters = all_filters(build_poset(rs));
  std::mt19937 rng(6);
  std::uniform_int_distribution<std::size_t> pick(0, filters.size() - 1);
  std::uniform_int_distribution<std::uint32_t> mask(0, 63);
  for (int trial = 0; trial < 400; ++trial) {
    const RootSet& phi = filters[pick(rng)];
    const ParabolicMask I(6, mask(rng));
    CHECK(I.is_subset_of(compatibility_mask(rs, phi)) == oracle::is_filter_for(rs, phi, I));
  }
}

TEST_CASE("abelian shortcut agrees with the pair scan", "[ideals][oracle]") {
  for (auto t : {SimpleType{Kind::G, 2}, SimpleType{Kind::F, 4}, SimpleType{Kind::E, 6}}) {
    const auto rs = build_root_system(t);
    INFO(t.name());
    for (const RootSet& phi : all_filters(build_poset(rs)))
      CHECK(is_abelian(rs, phi) == oracle::phi_squared(rs, phi).empty());
  }
}

TEST_CASE("ideals of p_I avoid Delta_I", "[ideals]") {
  for (auto t : {SimpleType{Kind::F, 4}, SimpleType{Kind::E, 6}}) {
    const auto rs = build_root_system(t);
    for (const RootSet& phi : all_filters(build_poset(rs))) {
      const ParabolicMask compat = compatibility_mask(rs, phi);
      phi.for_each([&](std::size_t b) {
        bool inside = true;
        for (int k = 0; k < rs.rank(); ++k)
          if (rs.root(b).coords[k] != 0 && !compat.contains(k)) inside = false;
        CHECK_FALSE(inside);
      });
    }
  }
}

TEST_CASE("make_ideal_record is self-consistent", "[ideals]") {
  const auto rs = build_root_system({Kind::E, 7});
  const auto p = build_poset(rs);
  std::size_t seen = 0;
  AntichainGenerator gen(p);
  gen.for_each([&](const AntichainItem& item) {
    if (++seen % 37 != 0) return;
    const IdealRecord rec = make_ideal_record(rs, p, item.filter);
    CHECK(rec.min_roots == item.antichain);
    CHECK(upward_closure(p, rec.min_roots) == rec.phi);
    CHECK(rec.size == item.filter.count());
  });
}
