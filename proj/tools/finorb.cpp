// Command-line front end: decides finiteness of orbit closures for vectors
// of binary forms under a torus-times-SL2 action, reports admissible faces,
// runs the sampling oracle, and computes curve limits. Exit codes: 0 verdict
// computed, 1 input error, 2 internal error.

#include <finorb/finorb.hpp>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using finorb::input_error;
using finorb::io::json;
namespace criterion = finorb::criterion;
namespace geometry = finorb::geometry;
namespace oracle = finorb::oracle;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

void emit(const std::string& output_path, const json& doc) {
    std::string text = finorb::io::dump_report(doc);
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw input_error("cannot open output file '" + output_path + "'");
        out << text;
    }
}

struct CommonArgs {
    std::string input;
    std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("input", args.input, "problem file (JSON), or - for stdin")->required();
    cmd->add_option("-o,--output", args.output, "write the report here instead of stdout");
}

bool verdicts_agree(const criterion::Verdict& a, const criterion::Verdict& b) {
    if (a.finite != b.finite || a.modality != b.modality) return false;
    if (a.witness.has_value() != b.witness.has_value()) return false;
    if (a.witness) {
        if (*a.witness_face != *b.witness_face) return false;
        if (a.witness->beta != b.witness->beta || !(a.witness->root == b.witness->root) ||
            a.witness->value != b.witness->value)
            return false;
    }
    if (a.reports.size() != b.reports.size()) return false;
    for (std::size_t i = 0; i < a.reports.size(); ++i)
        if (a.reports[i].face.indices != b.reports[i].face.indices ||
            a.reports[i].kernel != b.reports[i].kernel)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finiteness of orbit closures for vectors of binary forms"};
    app.require_subcommand(1);

    CommonArgs check_args;
    std::string route = "lift";
    bool with_modality = false;
    CLI::App* check = app.add_subcommand("check", "decide finiteness of the orbit closure");
    add_common(check, check_args);
    check->add_option("--route", route, "projective route: lift, direct, or both")
        ->check(CLI::IsMember({"lift", "direct", "both"}));
    check->add_flag("--modality", with_modality, "include the modality in the verdict");

    CommonArgs module_args;
    std::string witness_path;
    CLI::App* module =
        app.add_subcommand("module-check", "is every orbit closure in this module finite?");
    add_common(module, module_args);
    module->add_option("--emit-witness", witness_path,
                       "write a vector with infinitely many orbits to this file");

    CommonArgs faces_args;
    CLI::App* faces = app.add_subcommand("faces", "list maximal admissible faces");
    add_common(faces, faces_args);

    CommonArgs oracle_args;
    int sample_size = 8;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "sampling survey of torus classes per face");
    add_common(oracle_cmd, oracle_args);
    oracle_cmd->add_option("--sample-size", sample_size, "number of sampled values per face")
        ->check(CLI::PositiveNumber);

    CommonArgs limit_args;
    std::string curve_text;
    CLI::App* limit = app.add_subcommand("limit", "limit of the vector along a curve");
    add_common(limit, limit_args);
    limit->add_option("--curve", curve_text, "curve JSON: {\"r\":[..],\"p\":..,\"q\":..,\"c\":..,\"h\":[..]}")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            std::string text = read_input(check_args.input);
            criterion::ProblemSpec spec = finorb::io::parse_problem(text);
            finorb::io::Report rep;
            rep.mode = criterion::mode_name(spec.mode);
            rep.input_sha256 = sha256_hex(text);
            rep.with_modality = with_modality;
            if (spec.mode == criterion::Mode::affine) {
                rep.verdict = criterion::decide_affine(spec);
            } else if (route == "lift") {
                rep.route = "lift";
                rep.verdict = criterion::decide_projective(spec, criterion::Route::lift);
            } else if (route == "direct") {
                rep.route = "direct";
                rep.verdict = criterion::decide_projective(spec, criterion::Route::direct);
            } else {
                rep.route = "both";
                criterion::Verdict lift =
                    criterion::decide_projective(spec, criterion::Route::lift);
                criterion::Verdict direct =
                    criterion::decide_projective(spec, criterion::Route::direct);
                if (!verdicts_agree(lift, direct)) {
                    std::cerr << "internal error: lift and direct routes disagree\n";
                    return 2;
                }
                rep.verdict = std::move(lift);
            }
            emit(check_args.output, finorb::io::report_to_json(rep));
            return 0;
        }

        if (module->parsed()) {
            std::string text = read_input(module_args.input);
            criterion::ProblemSpec spec = finorb::io::parse_problem(text);
            criterion::ModuleVerdict mv = criterion::module_always_finite(spec);
            json doc;
            doc["tool"] = finorb::io::tool_name;
            doc["version"] = finorb::io::tool_version;
            doc["input_sha256"] = sha256_hex(text);
            doc["mode"] = criterion::mode_name(spec.mode);
            doc["always_finite"] = mv.always_finite;
            doc["witness_face"] =
                mv.witness_face ? json(mv.witness_face->indices) : json(nullptr);
            if (!mv.always_finite && !witness_path.empty()) {
                // Dependent characters on the witness face; build the vector.
                bool lifted = spec.mode == criterion::Mode::projective;
                std::vector<int> support;
                std::vector<finorb::IntVector> cols;
                for (int i : mv.witness_face->indices) {
                    if (spec.components[i].degree == 0) continue;
                    finorb::IntVector c = spec.components[i].character;
                    if (lifted) c.insert(c.begin(), finorb::Int(1));
                    cols.push_back(std::move(c));
                    support.push_back(i);
                }
                finorb::lattice::KernelBasis kb =
                    finorb::lattice::kernel_basis(finorb::lattice::IntMatrix::from_columns(cols));
                finorb::IntVector beta(mv.witness_face->indices.size(), finorb::Int(0));
                for (std::size_t j = 0; j < support.size(); ++j) {
                    auto pos = std::find(mv.witness_face->indices.begin(),
                                         mv.witness_face->indices.end(), support[j]) -
                               mv.witness_face->indices.begin();
                    beta[pos] = kb.vectors.at(0)[j];
                }
                criterion::ProblemSpec witness =
                    criterion::witness_vector(spec, mv.witness_face->indices, beta);
                std::ofstream out(witness_path, std::ios::binary);
                if (!out) throw input_error("cannot open witness file '" + witness_path + "'");
                out << finorb::io::serialize_problem(witness);
                doc["witness_written"] = witness_path;
            }
            emit(module_args.output, doc);
            return 0;
        }

        if (faces->parsed()) {
            std::string text = read_input(faces_args.input);
            criterion::ProblemSpec spec = finorb::io::parse_problem(text);
            std::vector<geometry::Face> mf = geometry::maximal_admissible_faces(
                criterion::char_points(spec), spec.mode == criterion::Mode::projective);
            json doc;
            doc["tool"] = finorb::io::tool_name;
            doc["version"] = finorb::io::tool_version;
            doc["input_sha256"] = sha256_hex(text);
            doc["mode"] = criterion::mode_name(spec.mode);
            doc["faces"] = finorb::io::faces_to_json(mf);
            emit(faces_args.output, doc);
            return 0;
        }

        if (oracle_cmd->parsed()) {
            std::string text = read_input(oracle_args.input);
            criterion::ProblemSpec spec = finorb::io::parse_problem(text);
            std::vector<geometry::Face> mf = geometry::maximal_admissible_faces(
                criterion::char_points(spec), spec.mode == criterion::Mode::projective);
            json doc;
            doc["tool"] = finorb::io::tool_name;
            doc["version"] = finorb::io::tool_version;
            doc["input_sha256"] = sha256_hex(text);
            doc["mode"] = criterion::mode_name(spec.mode);
            json arr = json::array();
            for (const geometry::Face& f : mf) {
                std::vector<finorb::GaussianRational> sample =
                    oracle::default_sample(spec, f.indices, sample_size);
                oracle::SurveyResult res = oracle::sample_survey(spec, f.indices, sample);
                json fj;
                fj["indices"] = f.indices;
                json sj = json::array();
                for (const finorb::GaussianRational& d : sample)
                    sj.push_back(finorb::gauss_to_string(d));
                fj["sample"] = sj;
                fj["classes"] = res.classes;
                fj["evidence"] = res.infinite_evidence ? "infinite" : "finite";
                arr.push_back(std::move(fj));
            }
            doc["faces"] = arr;
            emit(oracle_args.output, doc);
            return 0;
        }

        if (limit->parsed()) {
            std::string text = read_input(limit_args.input);
            criterion::ProblemSpec spec = finorb::io::parse_problem(text);
            oracle::CurveSpec curve = finorb::io::parse_curve(curve_text);
            oracle::LimitVector lim = oracle::curve_limit(
                spec, curve, spec.mode == criterion::Mode::projective);
            json doc;
            doc["tool"] = finorb::io::tool_name;
            doc["version"] = finorb::io::tool_version;
            doc["input_sha256"] = sha256_hex(text);
            doc["mode"] = criterion::mode_name(spec.mode);
            doc.update(finorb::io::limit_to_json(lim));
            emit(limit_args.output, doc);
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
