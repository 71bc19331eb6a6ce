#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realchern/chern/bundle.hpp"
#include "realchern/manifolds/manifold.hpp"

namespace realchern {

struct WorkspaceOptions {
    /// Cap for spaces that do not declare `degree_cap`.
    int default_degree_cap = 16;
    /// Let expressions overflow the cap (the excess is dropped).
    bool allow_truncation = false;
};

/// Named spaces, bundles, manifolds and maps read from definition files.
/// Names are unique across kinds; references must name something defined
/// earlier (in the same or a previously loaded file).
///
///   space S2 { generator h : 2; relation h^2; degree_cap 4;
///              fixed { generator e : 1; relation e^2; sq e 1 = 0; }
///              kappa h -> e; }
///   bundle hopf { base S2; chern = 1 + h; sw_fixed = 1 + e; }
///   manifold CP2 { space CP2s; dimension 4; total_sw = 1 + h + h^2;
///                  fixed_total_sw = 1 + x + x^2; fundamental h^2;
///                  fixed_fundamental x^2; }
///   manifold Q = CP1 * CP1;
///   map f : S2 -> BU4 { c1 -> h; c2 -> 0; fixed { w1 -> e; w2 -> 0; } }
///
/// Bundles and manifolds are stored without their compatibility checks so
/// that the verification commands can report bad data.
class Workspace {
public:
    explicit Workspace(WorkspaceOptions options = {}) : options_(options) {}

    /// Throws ParseError (with the original error code) on malformed input.
    void load_text(std::string_view text);
    void load_file(const std::filesystem::path& path);
    void load_catalogue();

    const WorkspaceOptions& options() const noexcept { return options_; }

    bool has(std::string_view name) const { return kinds_.count(std::string(name)) != 0; }
    /// "space", "bundle", "manifold", "map" or empty.
    std::string kind_of(std::string_view name) const;

    const SpacePtr& space(std::string_view name) const;
    const RealBundle& bundle(std::string_view name) const;
    const ManifoldModel& manifold(std::string_view name) const;
    const SpaceMap& map(std::string_view name) const;

    /// In declaration order.
    const std::vector<SpacePtr>& spaces() const noexcept { return spaces_; }
    const std::vector<RealBundle>& bundles() const noexcept { return bundles_; }
    const std::vector<ManifoldModel>& manifolds() const noexcept { return manifolds_; }
    const std::vector<SpaceMap>& maps() const noexcept { return maps_; }

    /// Registration from code; names must be fresh.
    void add(SpacePtr space);
    void add(RealBundle bundle);
    void add(ManifoldModel manifold);
    void add(SpaceMap map);

private:
    void claim(const std::string& name, const char* kind);

    WorkspaceOptions options_;
    std::map<std::string, std::string> kinds_;
    std::vector<SpacePtr> spaces_;
    std::vector<RealBundle> bundles_;
    std::vector<ManifoldModel> manifolds_;
    std::vector<SpaceMap> maps_;
};

/// Text of the shipped model catalogue.
std::string_view standard_catalogue();

}  // namespace realchern
