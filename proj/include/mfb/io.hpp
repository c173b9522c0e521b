#pragma once

#include <string>

#include "mfb/covering.hpp"
#include "mfb/curvegraph.hpp"
#include "mfb/numtheory.hpp"
#include "mfb/plumbing.hpp"
#include "mfb/resolution.hpp"

namespace mfb {

struct Document {
    std::string source;   // file name used in diagnostics
    CurveGraph graph;
};

// Line-based grammar, one record per line, '#' starts a comment:
//   graph <name>
//   s0=<int>/<int>
//   vertex <id> type=node m=<int> pair=<int>,<int> genus=<int> [switches=<int>{,<int>}]
//   vertex <id> type=arrow m=<int>
//   edge <id> <v1> <v2> sign=<+|-> [count=<int>] [attach=<int>,<int>]
// Throws parse_error with line/column diagnostics.
Document parse_curve_graph(const std::string& text, const std::string& source = "<input>");

// Grammar:
//   pvertex <id> euler=<int> genus=<int>
//   pedge <v1> <v2> sign=<+|->
PlumbGraph parse_plumb_graph(const std::string& text, const std::string& source = "<input>");

enum class Format { Native, Dot };

// Deterministic emission: records sorted by id, defaults omitted. Emitting
// and reparsing reproduces the graph; emitting again reproduces the bytes.
std::string emit_graph(const CurveGraph& g, Format f = Format::Native);
std::string emit_graph(const CoveredGraph& g, Format f = Format::Native);
std::string emit_graph(const MultGraph& g, Format f = Format::Native);
std::string emit_graph(const PlumbGraph& g, Format f = Format::Native);

std::string emit_validation_report(const ValidationReport& r);
std::string emit_k_report(const KReport& r);
std::string emit_invariants(const HomologyInvariants& inv);
std::string emit_hj_string(const HJString& s);

struct PipelineOptions {
    enum class Stage { Validate, Cover, Mult, Plumb };
    Stage stop_after = Stage::Plumb;
    Format format = Format::Native;
};

struct PipelineOutcome {
    ValidationReport validation;
    std::optional<KReport> k;   // set when validation passed
    std::string output;         // the requested stage, or the validation report
};

// validate -> min_k -> build_covering -> insert_strings ->
// compute_self_intersections, emitting the requested stage. Stops at the
// validation report when the graph is invalid; decoration failures propagate
// as decoration_error.
PipelineOutcome pipeline(const Document& doc, const PipelineOptions& opt = {});

}
