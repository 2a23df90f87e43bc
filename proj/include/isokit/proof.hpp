#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isokit/graph.hpp"
#include "isokit/pattern.hpp"

namespace isokit {

enum class CaseTag {
    NoCopy,
    WholeNbhd,
    Case1Strict,
    Case1_1,
    Case1_2JEmpty,
    Case1_2JSpecial,
    Case2C6,
    Case2_1,
    Case2_2_1,
    Case2_2_2,
};

std::string_view to_string(CaseTag tag);

/// One step of the constructive case analysis. Vertex and set bindings are
/// expressed in the coordinates of the (sub)graph at that recursion depth.
struct CaseStep {
    CaseTag tag;
    int depth = 0;
    Vertex center = -1;  // the chosen v, -1 when no copy exists
    std::vector<std::pair<std::string, std::string>> locals;
};

/// An F-isolating set together with the certified bound and the trace of
/// case steps that produced it.
struct Certificate {
    VertexSet set;
    int bound = 0;  // floor((m+1)/(k+2)) of the input graph
    std::vector<CaseStep> trace;
    /// Components handled directly because they form special pairs with F
    /// (only possible for disconnected input).
    std::vector<VertexSet> special_components;

    int size() const { return set.size(); }
};

enum class SolverErrorKind { SpecialPairInput, ProofInvariantViolated, PatternTooSmall };

class SolverError : public std::runtime_error {
public:
    SolverError(SolverErrorKind kind, const std::string& msg, std::vector<CaseStep> trace);
    SolverErrorKind kind() const { return kind_; }
    const std::vector<CaseStep>& context() const { return trace_; }

private:
    SolverErrorKind kind_;
    std::vector<CaseStep> trace_;
};

/// floor((m+1)/(k+2)).
int bound(int m, int k);

/// Produces an F-isolating set of G by running the constructive case
/// analysis. For connected G with k >= 2 and (G, F) not special the returned
/// set has size at most bound(m, k); this is checked at every recursion
/// level, as is the isolating property, and any failure surfaces as
/// ProofInvariantViolated with the trace. Disconnected input is solved
/// per component; special components are handled directly and recorded.
Certificate isolate(const Graph& g, const Pattern& f);

}  // namespace isokit
