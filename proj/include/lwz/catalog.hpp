#pragma once

// Named example surfaces with closed-form positions, verified symmetry
// fixtures, and (for the flat and polynomial entries) their null-curve
// patches.  Everything the tests and the CLI demos need in one place.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lwz/nullcurves.hpp"
#include "lwz/symmetry.hpp"
#include "lwz/weierstrass.hpp"

namespace lwz {

struct SymmetryFixture {
    DomainIsometry map;
    Mat3 linear{};
    bool has_translation = false;
    Vec3 translation{};
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    WeierstrassData data;
    Rect domain{};                  // default (x, y) sampling window
    std::optional<NullPatch> patch; // translation-surface form, if kept
    Rect patch_domain{};            // (u, v) window for the patch
    std::vector<SymmetryFixture> symmetries;
    std::function<Vec3(double, double)> closed_form; // exact f(x, y)
    double parameter = 0.0; // deformation parameter where one applies
};

/// Entry names in presentation order.
const std::vector<std::string>& catalog_names();

/// Throws Validation for an unknown name.  lambda feeds the entries with a
/// deformation parameter and is ignored by the rest.
CatalogEntry catalog_entry(const std::string& name, double lambda = 2.0);

} // namespace lwz
