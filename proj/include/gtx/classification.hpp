#pragma once

#include <map>
#include <optional>
#include <string>

#include "gtx/admissibility.hpp"
#include "gtx/modules_generic.hpp"

namespace gtx {

// L1..L20: minimal-orbit families; SL1..SL10: the singular families of the
// q >= 3 principal-orbit classification (SL10 is the full module V(T(v3bar))).
enum class FamilyId {
    L1, L2, L3, L4, L5, L6, L7, L8, L9, L10,
    L11, L12, L13, L14, L15, L16, L17, L18, L19, L20,
    SL1, SL2, SL3, SL4, SL5, SL6, SL7, SL8, SL9, SL10,
};

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);
bool family_is_minimal_orbit(FamilyId id);

enum class MultiplicityProfile { BoundedByT, EqualT, Infinite };
enum class ModuleClass { HighestWeight, Sl2Induced, Cuspidal };

struct FamilyDescriptor {
    FamilyId id;
    Regime regime;
    std::vector<std::string> free_params; // chosen in listed order
    MultiplicityProfile profile;
    ModuleClass module_class;
};

const FamilyDescriptor& family_descriptor(FamilyId id);

// Deterministic free-parameter choice: successive candidates base + 1/7,
// base + 2/11, base + 3/13, ... (prime denominators), first ones whose
// difference with every avoid-value is non-integral.
class ParameterChooser {
  public:
    explicit ParameterChooser(Rational base) : base_(std::move(base)) {}
    Rational next(const std::vector<Rational>& avoid);

  private:
    Rational base_;
    int idx_ = 0;
};

struct FamilyInstance {
    FamilyDescriptor desc;
    AdmissibleLevel level;
    long lambda1 = 0, lambda2 = 0;
    long a = 0;          // minimal-orbit twist index
    long mu1 = 0, mu2 = 0; // principal-orbit denominator box
    long t = 1;          // lambda2 + 1 (minimal orbit)
    std::map<std::string, Rational> params;
    ModuleSpec spec;
};

// Minimal-orbit families take (lambda1, lambda2, a); SL families take
// (lambda1, lambda2, mu1, mu2). Supplied params override the deterministic
// choice and are checked (ParameterClash on an integral difference).
FamilyInstance build_family(FamilyId id, const AdmissibleLevel& level, long lambda1, long lambda2, long a,
                            long mu1 = 0, long mu2 = 0,
                            const std::map<std::string, Rational>* supplied = nullptr);

struct FamilyReport {
    ClosureReport closure;
    RelationReport relations;
    WeightCensus census;
    bool multiplicities_ok = true;
    std::vector<long> growth_max; // max census count per nested window (Infinite profile)
    bool growth_ok = true;
    bool pass() const { return closure.pass() && relations.pass() && multiplicities_ok && growth_ok; }
};

struct VerifyOptions {
    long radius = 6;
    long margin = 1;
    ElementMode relation_mode = ElementMode::All;
    size_t relation_sample = 0; // per pair, when sampling
    std::vector<long> growth_radii = {4, 6, 8};
};

FamilyReport verify_family(const FamilyInstance& inst, const VerifyOptions& opts);

struct CrossCharacterReport {
    std::vector<std::pair<FamilyId, std::vector<Rational>>> characters;
    bool pass = true;
};

// Central characters across families at the same level data must agree.
CrossCharacterReport cross_character_check(const std::vector<FamilyInstance>& instances, long probe_radius = 4);

// Interior probe: member of maximal window slack (first in basis order).
std::optional<BasisElement> interior_probe(const ModuleSpec& spec, long radius);

} // namespace gtx
