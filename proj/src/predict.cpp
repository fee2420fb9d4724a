#include "rvc/predict.hpp"

#include <algorithm>
#include <stdexcept>

namespace rvc {

namespace {

Prediction make(Parameter p, PredictionForm form, int lo, int hi, std::string caveat,
                std::string citation) {
    if (lo > hi) throw std::logic_error("prediction bounds out of order");
    Prediction out;
    out.parameter = p;
    out.form = form;
    out.lo = lo;
    out.hi = hi;
    out.caveat = std::move(caveat);
    out.citation = std::move(citation);
    return out;
}

Prediction exact(Parameter p, int value, std::string citation) {
    return make(p, PredictionForm::exact, value, value, "", std::move(citation));
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

const char* prediction_form_name(PredictionForm form) {
    switch (form) {
        case PredictionForm::exact: return "exact";
        case PredictionForm::interval: return "interval";
        case PredictionForm::bounds: return "bounds";
        case PredictionForm::conditional: return "conditional";
        case PredictionForm::silent: return "silent";
    }
    return "exact";
}

int Prediction::value() const {
    if (lo != hi) throw std::logic_error("prediction does not pin a single value");
    return lo;
}

Prediction predict_bioriented(const std::string& family, Parameter parameter, int n,
                              const std::vector<int>& class_sizes) {
    if (parameter != Parameter::rvc && parameter != Parameter::srvc)
        throw std::invalid_argument("no recorded closed form for the arc parameters here");
    bool srvc = parameter == Parameter::srvc;

    if (family == "path") {
        if (n < 2) throw std::invalid_argument("path needs n >= 2");
        return exact(parameter, n - 2,
                     "bioriented path: both vertex parameters equal n-2");
    }
    if (family == "cycle") {
        if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
        int half = (n + 1) / 2;
        int value;
        if (n == 3 || n == 5 || n == 9) {
            value = half - 2;
        } else if (n == 14 || n >= 16) {
            value = half;
        } else if (n == 11 || n == 13 || n == 15) {
            value = srvc ? half : half - 1;
        } else {
            value = half - 1;  // n in {4,6,7,8,10,12}
        }
        return exact(parameter,
                     value,
                     "bioriented cycle: ceil(n/2)-2 for n in {3,5,9}, ceil(n/2)-1 for n in "
                     "{4,6,7,8,10,12}, ceil(n/2) for n = 14 and n >= 16, and for n in "
                     "{11,13,15} rvc = ceil(n/2)-1 while srvc = ceil(n/2)");
    }
    if (family == "wheel") {
        if (n < 3) throw std::invalid_argument("wheel needs n >= 3 rim vertices");
        return exact(parameter, n == 3 ? 0 : 1,
                     "bioriented wheel: value 1 for at least four rim vertices; three rim "
                     "vertices give a complete digraph and value 0");
    }
    if (family == "complete") {
        if (n < 2) throw std::invalid_argument("complete digraph needs n >= 2");
        return exact(parameter, 0, "complete digraph: diameter 1, both vertex parameters 0");
    }
    if (family == "star") {
        if (n < 2) throw std::invalid_argument("star needs at least two leaves");
        return exact(parameter, 1,
                     "bioriented star: diameter 2, both vertex parameters 1");
    }
    if (family == "multipartite") {
        if (class_sizes.size() < 2) throw std::invalid_argument("need at least two classes");
        bool big = false;
        for (int s : class_sizes) {
            if (s < 1) throw std::invalid_argument("class sizes must be positive");
            if (s >= 2) big = true;
        }
        return exact(parameter, big ? 1 : 0,
                     "complete multipartite biorientation: value 1 when some class has two or "
                     "more vertices, else the digraph is complete and the value is 0");
    }
    throw std::invalid_argument("unknown bioriented family tag: " + family);
}

Prediction predict_directed_cycle(int n) {
    if (n < 3) throw std::invalid_argument("directed cycle needs n >= 3");
    int value = n <= 4 ? n - 2 : n;
    return exact(Parameter::rvc, value,
                 "directed cycle: both vertex parameters equal n-2 for n in {3,4} and n for "
                 "n >= 5");
}

PredictionTriple predict_cycle_subdigraph(const CycleSubdigraphClass& cls, int n) {
    using Kind = CycleSubdigraphClass::Kind;
    if (n < 3) throw std::invalid_argument("cycle subdigraph needs n >= 3");
    int half = n / 2;
    bool both_le = cls.seg_p <= half + 1 && cls.seg_p_prime <= half + 1;

    const std::string rvc_cite =
        "cycle subdigraph rvc: n-2 when the asymmetric arcs form one or two blocks of total "
        "size at most three or two adjacent pairs on four vertices, n-1 for a pair plus a "
        "separated single arc or two separated pairs, n otherwise";
    int rvc_value;
    switch (cls.kind) {
        case Kind::K_EQ_1:
        case Kind::D1:
        case Kind::D2:
            rvc_value = n - 2;
            break;
        case Kind::D4:
            rvc_value = n == 4 ? n - 2 : n - 1;
            break;
        case Kind::D3:
            rvc_value = n - 1;
            break;
        default:
            rvc_value = n;
            break;
    }

    const std::string srvc_cite =
        "cycle subdigraph srvc: n-2, n-1 or n depending on the block layout, the order, and "
        "the bioriented segment lengths against floor(n/2)";
    int srvc_value = n;
    bool tier1 = cls.kind == Kind::K_EQ_1 ||
                 (cls.kind == Kind::D1 && (n <= 8 || both_le)) ||
                 (cls.kind == Kind::D2 && n <= 8) ||
                 (cls.kind == Kind::D4 && n == 4);
    bool tier2 = !tier1 &&
                 ((cls.kind == Kind::D1 && n >= 9 &&
                   (cls.seg_p == 0 || cls.seg_p == half + 2 || cls.seg_p_prime == half + 2)) ||
                  (cls.kind == Kind::D3 && (n <= 10 || both_le)) ||
                  (cls.kind == Kind::D4 && n >= 5 &&
                   (n <= 8 || (cls.seg_p <= half && cls.seg_p_prime <= half))));
    if (tier1)
        srvc_value = n - 2;
    else if (tier2)
        srvc_value = n - 1;

    const std::string rc_cite =
        "cycle subdigraph rc: n-1 when at most two reverse arcs are missing, n otherwise";
    int rc_value = cls.k <= 2 ? n - 1 : n;

    return PredictionTriple{exact(Parameter::rvc, rvc_value, rvc_cite),
                            exact(Parameter::srvc, srvc_value, srvc_cite),
                            exact(Parameter::rc, rc_value, rc_cite)};
}

PredictionTriple predict_circulant(int n, int k) {
    if (n < 3) throw std::invalid_argument("circulant needs n >= 3");
    if (k < 1 || k > n - 1) throw std::invalid_argument("need 1 <= k <= n - 1");

    const std::string rc_cite =
        "circulant with consecutive jumps 1..k: rc = src = ceil(n/k) for k <= n-2, and 1 on "
        "the complete digraph";

    if (k == n - 1) {
        return PredictionTriple{
            exact(Parameter::rvc, 0, "complete digraph: vertex parameters 0"),
            exact(Parameter::srvc, 0, "complete digraph: vertex parameters 0"),
            exact(Parameter::rc, 1, rc_cite)};
    }
    Prediction rc = exact(Parameter::rc, ceil_div(n, k), rc_cite);
    if (k == 1) {
        Prediction dc = predict_directed_cycle(n);
        Prediction srvc = dc;
        srvc.parameter = Parameter::srvc;
        return PredictionTriple{dc, srvc, rc};
    }
    if (k >= n / 2) {
        const std::string cite =
            "circulant with consecutive jumps 1..k: diameter 2 and both vertex parameters 1 "
            "for floor(n/2) <= k <= n-2";
        return PredictionTriple{exact(Parameter::rvc, 1, cite), exact(Parameter::srvc, 1, cite),
                                rc};
    }

    // main range 2 <= k <= floor(n/2) - 1
    int a_ceil = ceil_div(n, k);
    if (n % k != 0 && n % k != 1) {
        const std::string cite_rvc =
            "circulant with consecutive jumps 1..k, n not 0 or 1 mod k: rvc = ceil(n/k) - 1";
        const std::string cite_srvc =
            "circulant with consecutive jumps 1..k, n not 0 or 1 mod k: srvc = ceil(n/k)";
        const std::string caveat = "guaranteed for n >= 2k(k+1)";
        Prediction srvc;
        if (n >= 2 * k * (k + 1))
            srvc = make(Parameter::srvc, PredictionForm::conditional, a_ceil, a_ceil, caveat,
                        cite_srvc);
        else
            srvc = make(Parameter::srvc, PredictionForm::bounds, a_ceil - 1, a_ceil, caveat,
                        cite_srvc);
        return PredictionTriple{exact(Parameter::rvc, a_ceil - 1, cite_rvc), srvc, rc};
    }
    if (n % k == 1) {
        int a = (n - 1) / k;
        if (a < 3) throw std::logic_error("unexpected small quotient inside the main range");
        if (n % (a - 1) == 0) {
            const std::string cite =
                "circulant with n = ak+1 and a-1 dividing n: rvc = srvc = (n-1)/k - 1";
            return PredictionTriple{exact(Parameter::rvc, a - 1, cite),
                                    exact(Parameter::srvc, a - 1, cite), rc};
        }
        const std::string cite_rvc =
            "circulant with n = ak+1 and a-1 not dividing n: rvc = (n-1)/k";
        Prediction rvc = exact(Parameter::rvc, a, cite_rvc);
        Prediction srvc;
        if (a < k + 2) {
            srvc = exact(Parameter::srvc,
                         a, "circulant with n = ak+1, a-1 not dividing n, a < k+2: srvc = (n-1)/k");
        } else if (a > k + 2) {
            srvc = exact(Parameter::srvc, a + 1,
                         "circulant with n = ak+1, a-1 not dividing n, a > k+2: srvc = ceil(n/k)");
        } else {
            // a = k+2 forces n = (k+1)^2, where a-1 divides n, so this branch
            // cannot be reached; the case analysis records no value for it.
            srvc = make(Parameter::srvc, PredictionForm::silent, a, a + 1,
                        "no recorded value for a = k+2",
                        "circulant with n = ak+1, a-1 not dividing n: the a = k+2 case is "
                        "arithmetically empty");
        }
        return PredictionTriple{rvc, srvc, rc};
    }
    // n = ak
    int a = n / k;
    if (a == 3 || a == 4) {
        const std::string cite =
            "circulant with n = ak, a in {3,4}: rvc = srvc = n/k - 1";
        return PredictionTriple{exact(Parameter::rvc, a - 1, cite),
                                exact(Parameter::srvc, a - 1, cite), rc};
    }
    const std::string cite_rvc =
        "circulant with n = ak, a >= 5: rvc is n/k - 1 or n/k";
    const std::string cite_srvc = "circulant with n = ak, a >= 5: srvc = n/k";
    return PredictionTriple{
        make(Parameter::rvc, PredictionForm::interval, a - 1, a, "", cite_rvc),
        exact(Parameter::srvc, a, cite_srvc), rc};
}

Prediction predict_tournament(TournamentKind kind, Parameter parameter, int n, int k,
                              int diam) {
    bool vertex = parameter == Parameter::rvc || parameter == Parameter::srvc;
    switch (kind) {
        case TournamentKind::T4:
            if (vertex)
                return exact(parameter, 2,
                             "the strongly connected tournament on four vertices has rvc = "
                             "srvc = 2");
            if (n == 0) n = 4;
            if (diam == 0) diam = 3;
            break;
        case TournamentKind::T5_1:
            if (vertex)
                return exact(parameter, 1,
                             "a diameter-2 tournament on five vertices has rvc = srvc = 1");
            if (n == 0) n = 5;
            if (diam == 0) diam = 2;
            break;
        case TournamentKind::T_nk:
            if (n < 5 || k < 2 || k > n - 2)
                throw std::invalid_argument("need n >= 5 and 2 <= k <= n - 2");
            if (vertex)
                return exact(parameter, k,
                             "the layered tournament construction has rvc = srvc = k for every "
                             "2 <= k <= n-2");
            break;
        default:
            break;
    }
    if (n < 3 || diam < 2)
        throw std::invalid_argument("bound predictions need the order and the diameter");
    if (parameter == Parameter::srvc)
        return make(Parameter::srvc, PredictionForm::bounds, 1, n - 2, "",
                    "strongly connected tournament: 1 <= rvc <= srvc <= n-2");
    if (parameter == Parameter::rvc)
        return make(Parameter::rvc, PredictionForm::bounds, std::max(1, diam - 1),
                    std::min(diam + 3, n - 2), "",
                    "strongly connected tournament: diam-1 <= rvc <= diam+3, inside 1..n-2");
    return make(parameter, PredictionForm::bounds, std::max(2, diam),
                std::min(diam + 2, n - 1), "",
                "strongly connected tournament: max(2, diam) <= rc <= min(diam+2, n-1)");
}

}  // namespace rvc
