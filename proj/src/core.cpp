#include "tot/core.hpp"

namespace tot {

std::vector<int> to_list(VSet s) {
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

VSet from_list(const std::vector<int>& vs) {
    VSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices) throw Error(ErrorKind::InvalidInput, "vertex out of range");
        s |= bit(v);
    }
    return s;
}

std::string set_str(VSet s) {
    std::string out = "{";
    bool first = true;
    for_each_vertex(s, [&](int v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

bool lex_less(VSet x, VSet y) {
    VSet d = x ^ y;
    if (!d) return false;
    int b = std::countr_zero(d);
    VSet above = (b >= 63) ? 0 : ~((VSet{1} << (b + 1)) - 1);
    if (has(x, b)) return (y & above) != 0;
    return (x & above) == 0;
}

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotACover: return "NotACover";
        case ErrorKind::CrossingEdge: return "CrossingEdge";
        case ErrorKind::MismatchedGround: return "MismatchedGround";
        case ErrorKind::NotInSystem: return "NotInSystem";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotAStar: return "NotAStar";
        case ErrorKind::NotInProfile: return "NotInProfile";
        case ErrorKind::Indistinct: return "Indistinct";
        case ErrorKind::NotNested: return "NotNested";
        case ErrorKind::Irregular: return "Irregular";
        case ErrorKind::NoTangles: return "NoTangles";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::HypothesisFailure: return "HypothesisFailure";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::EmulationFailure: return "EmulationFailure";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::NotExclusiveAnywhere: return "NotExclusiveAnywhere";
        case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
        case ErrorKind::NonDistributive: return "NonDistributive";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Error";
}

}  // namespace tot
