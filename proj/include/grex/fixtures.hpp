#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grex/cyc_cohomology.hpp"
#include "grex/isotropy.hpp"
#include "grex/poly.hpp"

namespace grex {

struct RowExpectation {
    unsigned s_from, s_to, s_step;
    RationalSeries series;
};

struct GradedActionFixture {
    std::string name;
    std::string description;
    GradedAction action;
    std::vector<RowExpectation> rows; // may be empty
    unsigned t_max = 20;
};

struct PresentationFixture {
    std::string name;
    std::string description;
    Presentation pres;
    std::optional<RationalSeries> series; // expected graded dimensions
    unsigned max_degree = 20;
};

struct RepGroupFixture {
    std::string name;
    std::string description;
    std::vector<GroupElement> generators;
    std::size_t order;
    std::optional<unsigned> expected_bound;
};

struct IdentityListFixture {
    std::string name;
    std::vector<SeriesIdentity> identities;
};

using Fixture = std::variant<GradedActionFixture, PresentationFixture, RepGroupFixture, IdentityListFixture>;

/// Parse and validate a fixture file.  Throws FixtureError on malformed
/// input (with position information from the JSON parser) and the domain
/// error types on invariant violations.
Fixture load_fixture(const std::string& path);

const char* fixture_kind(const Fixture& f);
const std::string& fixture_name(const Fixture& f);

} // namespace grex
