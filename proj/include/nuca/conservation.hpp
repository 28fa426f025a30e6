#pragma once

// Number conservation: the finite forbidden-window set of rule words of
// length 2r+1, the induced subshift of finite type, per-distribution
// verdicts and a finite-configuration charge oracle.

#include <optional>
#include <string>
#include <vector>

#include "nuca/core.hpp"

namespace nuca {

struct NcWindowCheck {
    bool conserving = true;
    std::optional<Word> violating_input;  // u with the identity broken
};

struct NcForbiddenSet {
    RuleSetPtr rule_set;
    std::vector<std::pair<RuleWord, Word>> windows;  // (psi, violating u)

    bool contains(const RuleWord& psi) const;
};

struct NcSft {
    RuleSetPtr rule_set;
    int num_vertices = 0;  // rule words of length 2r, id base |R|
    std::vector<std::pair<int, int>> edges;  // allowed windows, prefix -> suffix
    bool empty = true;  // no bi-infinite path (no NC distribution exists)

    std::string to_dot() const;
};

struct NcReport {
    bool conserving = true;
    std::optional<long long> window_lo;  // [j-2r, j] of the first bad window
    std::optional<long long> window_hi;
    std::optional<RuleWord> window;
    std::optional<Word> violating_input;
};

struct ChargeOracleResult {
    bool confirmed = true;
    std::optional<Configuration> violating;  // finite configuration
    long long charge_before = 0;
    long long charge_after = 0;
    long long checked = 0;
};

/// Check the charge identity for one window psi of length 2r+1, over all
/// u in A^{2r+1}. Integer arithmetic, no modular reduction.
NcWindowCheck is_nc_window(const RuleSet& rs, const RuleWord& psi);

NcForbiddenSet forbidden_nc_windows(const RuleSetPtr& rs);

NcReport is_distribution_nc(const Distribution& theta);

NcSft nc_sft(const RuleSetPtr& rs);

/// Exhaustively (or randomly with `random_samples` > 0) check charge
/// conservation on finite configurations supported in [-width, width].
ChargeOracleResult charge_oracle(const Distribution& theta, int width,
                                 long long random_samples = 0, unsigned seed = 0);

}  // namespace nuca
