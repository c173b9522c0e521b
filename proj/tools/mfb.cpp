#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mfb/errors.hpp"
#include "mfb/io.hpp"

namespace {

// '-' reads standard input
std::string read_file(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mfb::input_error("cannot open '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

mfb::Format parse_format(const std::string& f) {
    if (f == "native") return mfb::Format::Native;
    if (f == "dot") return mfb::Format::Dot;
    throw mfb::input_error("unknown format '" + f + "' (native|dot)");
}

mfb::PipelineOptions::Stage parse_stage(const std::string& s) {
    using Stage = mfb::PipelineOptions::Stage;
    if (s == "validate") return Stage::Validate;
    if (s == "cover") return Stage::Cover;
    if (s == "mult") return Stage::Mult;
    if (s == "plumb") return Stage::Plumb;
    throw mfb::input_error("unknown stage '" + s + "' (validate|cover|mult|plumb)");
}

mfb::Int parse_int_arg(const std::string& s) {
    std::size_t i = s.size() > 1 && s[0] == '-' ? 1 : 0;
    if (i == s.size()) throw mfb::input_error("malformed integer '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw mfb::input_error("malformed integer '" + s + "'");
    return mfb::Int(s);
}

// stdout carries exactly the requested stage; reports go to stderr
int run_resolve(const std::string& path, const std::string& stage, const std::string& format) {
    mfb::PipelineOptions opt;
    opt.stop_after = parse_stage(stage);
    opt.format = parse_format(format);
    mfb::Document doc = mfb::parse_curve_graph(read_file(path), path);
    mfb::PipelineOutcome out = mfb::pipeline(doc, opt);
    if (opt.stop_after == mfb::PipelineOptions::Stage::Validate) {
        std::cout << out.output;
        return out.validation.ok() ? 0 : 1;
    }
    if (!out.validation.ok()) {
        std::cerr << out.output;
        return 1;
    }
    for (const auto& w : out.validation.warnings)
        std::cerr << "warning " << w.where << ": " << w.message << "\n";
    if (out.k) std::cerr << mfb::emit_k_report(*out.k);
    std::cout << out.output;
    return 0;
}

}

int main(int argc, char** argv) {
    CLI::App app{"curve configurations to plumbing graphs"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "native";
    std::string stage = "plumb";
    std::vector<std::string> hj;

    CLI::App* c_validate = app.add_subcommand("validate", "check a curve configuration");
    c_validate->add_option("file", file)->required();

    CLI::App* c_mink = app.add_subcommand("mink", "smallest admissible even k");
    c_mink->add_option("file", file)->required();

    CLI::App* c_cover = app.add_subcommand("cover", "cyclic covering of a configuration");
    c_cover->add_option("file", file)->required();
    c_cover->add_option("--format", format, "native|dot");

    CLI::App* c_resolve = app.add_subcommand("resolve", "full pipeline to a plumbing graph");
    c_resolve->add_option("file", file)->required();
    c_resolve->add_option("--stop-after", stage, "validate|cover|mult|plumb");
    c_resolve->add_option("--format", format, "native|dot");

    CLI::App* c_inv = app.add_subcommand("invariants", "intersection-form invariants");
    c_inv->add_option("file", file)->required();

    CLI::App* c_norm = app.add_subcommand("normalize", "reduce '-' edges via vertex flips");
    c_norm->add_option("file", file)->required();
    c_norm->add_option("--format", format, "native|dot");

    CLI::App* c_string = app.add_subcommand("string", "resolution string of (a;b,c|n1;n2,n3)");
    c_string->add_option("abc", hj, "a b c n1 n2 n3")->expected(6);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand(c_validate)) {
            mfb::Document doc = mfb::parse_curve_graph(read_file(file), file);
            mfb::ValidationReport rep = mfb::validate(doc.graph);
            std::cout << mfb::emit_validation_report(rep);
            return rep.ok() ? 0 : 1;
        }
        if (app.got_subcommand(c_mink)) {
            mfb::Document doc = mfb::parse_curve_graph(read_file(file), file);
            mfb::ValidationReport rep = mfb::validate(doc.graph);
            if (!rep.ok()) {
                std::cerr << mfb::emit_validation_report(rep);
                return 1;
            }
            std::cout << mfb::emit_k_report(mfb::min_k(doc.graph));
            return 0;
        }
        if (app.got_subcommand(c_cover)) return run_resolve(file, "cover", format);
        if (app.got_subcommand(c_resolve)) return run_resolve(file, stage, format);
        if (app.got_subcommand(c_inv)) {
            mfb::PlumbGraph pg = mfb::parse_plumb_graph(read_file(file), file);
            std::cout << mfb::emit_invariants(mfb::homology_invariants(pg));
            return 0;
        }
        if (app.got_subcommand(c_norm)) {
            mfb::PlumbGraph pg = mfb::parse_plumb_graph(read_file(file), file);
            std::cout << mfb::emit_graph(mfb::canonicalize_signs(pg), parse_format(format));
            return 0;
        }
        if (app.got_subcommand(c_string)) {
            mfb::HJString s = mfb::hj_string(parse_int_arg(hj[0]), parse_int_arg(hj[1]),
                                             parse_int_arg(hj[2]), parse_int_arg(hj[3]),
                                             parse_int_arg(hj[4]), parse_int_arg(hj[5]));
            std::cout << mfb::emit_hj_string(s);
            return 0;
        }
    } catch (const mfb::decoration_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mfb::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
