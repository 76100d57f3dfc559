#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitrans/norm_model.hpp"

namespace semitrans {

enum class StKind { Yes, No, Boundary };
enum class Side { Inner, Outer };
enum class BstKind { Yes, No, Unknown };
enum class UmstKind { EligibleYes, No, Unknown };
enum class PilgrimKind { LikelyYes, LikelyNo, Unknown };

std::string_view to_string(StKind k);
std::string_view to_string(Side s);
std::string_view to_string(BstKind k);
std::string_view to_string(UmstKind k);
std::string_view to_string(PilgrimKind k);

struct StVerdict {
    StKind kind = StKind::Yes;
    // first failing point, for No
    std::optional<double> witness_theta;
    std::optional<Side> missing;
    std::size_t points_checked = 0;
    double min_inner_radius = 0.0;
    double max_outer_radius = 0.0;
};

struct BstVerdict {
    BstKind kind = BstKind::Unknown;
    std::optional<double> lambda;
    std::string reason;
    std::optional<double> power2_model;
    std::optional<double> power2_dual;
    double worst_theta = 0.0;
};

struct UmstRow {
    double eps = 0.0;
    double delta = 0.0;
};

struct UmstVerdict {
    UmstKind kind = UmstKind::Unknown;
    double kappa_min = 0.0;
    std::vector<UmstRow> table;
    std::string reason;
};

struct FlatInterval {
    double theta_lo = 0.0;
    double theta_hi = 0.0;
};

struct PilgrimResult {
    PilgrimKind kind = PilgrimKind::Unknown;
    double fraction = 0.0;
    // polar angles of the targets orbit_map could not reach
    std::vector<double> blocked;
};

struct Verdict {
    StVerdict st;
    BstVerdict bst;
    UmstVerdict umst;
    std::vector<FlatInterval> flat_points;
    PilgrimKind pilgrim_dense = PilgrimKind::Unknown;
    std::optional<bool> dual_st_agrees;
};

inline constexpr double kKappaFloor = 1e-6;
inline constexpr double kBstRatioLimit = 100.0;
inline const std::vector<double> kUmstEps{0.05, 0.1, 0.2, 0.4};

/// Inner and outer discs at the 1024 table points and the feature angles.
StVerdict classify_st(const NormModel& model);
BstVerdict classify_bst(const NormModel& model, const StVerdict& st);
BstVerdict classify_bst(const NormModel& model);
UmstVerdict classify_umst(const NormModel& model);

/// For each eps, the largest sampled ||a - b|| below which every L^ab_eps certifies (256 a's, 32 offsets).
std::vector<UmstRow> umst_delta_table(const NormModel& model, const std::vector<double>& eps_list = kUmstEps);

/// Smallest lambda with F inside lambda E.
double ellipse_ratio(const Sym2& inner, const Sym2& outer);

/// Maximal arcs of the cache that lie on one line.
std::vector<FlatInterval> find_flat(const NormModel& model);

PilgrimResult pilgrim_probe(const NormModel& model, const SpherePoint& x, std::size_t grid = 512);

struct ClassifyOptions {
    bool dual_check = true;
    bool pilgrim = true;
};

Verdict classify(const NormModel& model, const ClassifyOptions& options = {});

struct GalleryEntry {
    std::string name;
    NormModel model;
    bool smooth = false;  // C1 sphere, for the decomposition sweep
};

/// The reference models used across the checks.
std::vector<GalleryEntry> gallery();

}  // namespace semitrans
