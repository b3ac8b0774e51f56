#pragma once

#include "ntb/cell_model.hpp"
#include "ntb/chains.hpp"
#include "ntb/oracle.hpp"
#include "ntb/reduce.hpp"
#include "ntb/semiconjugacy.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace ntb {

// The one-parameter trace of the model: the alternating sum of the tensor
// traces of the boundary matrices against the transport matrices,
//   R = - trace(partial1 (x) D0) + trace(partial2 (x) D1),
// a degree one Hochschild chain over the twisted group ring.
inline Chain1 one_parameter_trace(const CellModel& m) {
    if (!boundary_fixed_point_free(m.homotopy))
        throw std::domain_error("an end map of the deformation has fixed points");
    TensorTraceResult block1 = tensor_trace(m.partial1, m.d0, m.phi);
    TensorTraceResult block2 = tensor_trace(m.partial2, m.d1, m.phi);
    return block2.chain - block1.chain;
}

struct TraceAnalysis {
    Chain1 chain;
    bool cycle = false;
    // Index of every semiconjugacy class met by the trace, including the
    // classes whose contributions cancel to zero.
    std::map<SemiClass, Int> indices;
    Int nielsen = 0;
    std::array<Int, 2> lefschetz{0, 0};
};

// Full algebraic pipeline: assemble the trace, split it by semiconjugacy
// class, and reduce each part to its integer index with a verified
// certificate.  The count of classes with nonzero index is the one-parameter
// Nielsen number; the index total in the distinguished kernel direction is
// the one-parameter Lefschetz class.
inline TraceAnalysis analyze(const CellModel& m) {
    TraceAnalysis a;
    a.chain = one_parameter_trace(m);
    a.cycle = is_cycle(a.chain, m.phi);
    if (!a.cycle) throw std::logic_error("the assembled trace is not a cycle");
    for (auto& [cls, part] : split_by_class(a.chain, m.phi)) {
        ReduceResult red = reduce_cycle(part, m.phi, cls);
        a.indices[cls] = red.index;
        if (red.index != 0) a.nielsen += 1;
        a.lefschetz[0] += red.index;
    }
    return a;
}

inline Int nielsen_number(const CellModel& m) { return analyze(m).nielsen; }

inline std::array<Int, 2> lefschetz_class(const CellModel& m) { return analyze(m).lefschetz; }

} // namespace ntb
