#pragma once

#include <sstream>
#include <string>

namespace acceptance {

struct Outcome {
    bool pass = true;
    std::string detail;

    // records a failed condition, keeps going so the detail lists everything
    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        note("failed: " + what);
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Outcome dyadic_l1_maps();
Outcome euclidean_modulus();
Outcome curvature_scale_law();
Outcome lp_classification();
Outcome grandpa_pig_table();
Outcome lab_norm_estimates();
Outcome nobst_build();
Outcome duality();
Outcome decomposition();
Outcome implication_chain();

}  // namespace acceptance
