#ifndef RVC_PREDICT_HPP
#define RVC_PREDICT_HPP

#include <string>
#include <vector>

#include "rvc/families.hpp"
#include "rvc/solver.hpp"

namespace rvc {

// How much a closed-form result pins down: an exact value, a two-valued
// interval the value provably lies in, outer bounds, a value asserted only
// under a side condition (spelled out in caveat), or silence where the case
// analysis records no value at all.
enum class PredictionForm { exact, interval, bounds, conditional, silent };
const char* prediction_form_name(PredictionForm form);

struct Prediction {
    Parameter parameter = Parameter::rvc;
    PredictionForm form = PredictionForm::exact;
    int lo = 0;
    int hi = 0;
    std::string caveat;    // nonempty exactly when the source qualifies the value
    std::string citation;  // statement of the closed form being applied

    bool pins_value() const {
        return form == PredictionForm::exact || form == PredictionForm::conditional;
    }
    int value() const;  // requires lo == hi
    bool admits(int v) const { return v >= lo && v <= hi; }
};

struct PredictionTriple {
    Prediction rvc;
    Prediction srvc;
    Prediction rc;  // the arc parameters coincide on these families
};

// family is one of the build_family biorientation tags: path, cycle, wheel,
// complete, star, multipartite. Only the vertex parameters have recorded
// closed forms.
Prediction predict_bioriented(const std::string& family, Parameter parameter, int n,
                              const std::vector<int>& class_sizes = {});

// One prediction covering both vertex parameters, which coincide on directed
// cycles.
Prediction predict_directed_cycle(int n);

PredictionTriple predict_cycle_subdigraph(const CycleSubdigraphClass& cls, int n);

// Consecutive-jump circulant C_n([k]), any 1 <= k <= n-1.
PredictionTriple predict_circulant(int n, int k);

// Exact for the named instances, bounds otherwise; diam is needed only for
// the bound forms on random tournaments.
Prediction predict_tournament(TournamentKind kind, Parameter parameter, int n, int k = 0,
                              int diam = 0);

}  // namespace rvc

#endif
