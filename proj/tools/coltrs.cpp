#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coltrs/certify.hpp"
#include "coltrs/codec.hpp"
#include "coltrs/construct.hpp"
#include "coltrs/examples.hpp"
#include "coltrs/galois.hpp"
#include "coltrs/gfmatrix.hpp"
#include "coltrs/io.hpp"

using nlohmann::json;
using namespace coltrs;

namespace {

// Every invocation reports what it did as one JSON line on stderr:
// {command, parameters, outputs, verdicts, exit}.  --manifest also lands
// the same object in a file.  Exit is 0 only when every boolean verdict
// is true.
struct Manifest {
    std::string command = "(usage)";
    json parameters = json::object();
    std::vector<std::string> outputs;
    json verdicts = json::object();
    std::optional<std::string> error;
    int exit_code = 0;
};

void emit_manifest(const Manifest& man, const std::string& path) {
    json j;
    j["command"] = man.command;
    j["parameters"] = man.parameters;
    j["outputs"] = man.outputs;
    j["verdicts"] = man.verdicts;
    if (man.error) j["error"] = *man.error;
    j["exit"] = man.exit_code;
    std::cerr << j.dump() << "\n";
    if (!path.empty()) {
        try {
            atomic_write(path, j.dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "manifest write failed: " << e.what() << "\n";
        }
    }
}

int exit_from_verdicts(const json& verdicts) {
    for (const auto& [key, value] : verdicts.items())
        if (value.is_boolean() && !value.get<bool>()) return 1;
    return 0;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ';' || ch == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::uint32_t> parse_uint_list(const std::string& s, const char* what) {
    std::vector<std::uint32_t> out;
    for (const auto& tok : split_list(s)) {
        try {
            unsigned long v = std::stoul(tok);
            if (v > 0xffffffffUL) throw std::out_of_range(tok);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad number '" + tok + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

std::string join_uints(const std::vector<std::uint32_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(v[i]);
    }
    return s;
}

// Exponent form plus coefficient form for extension fields, e.g.
// "w^5(2,1,0)"; prime fields print the decimal value alone.
std::string format_both(const Field& F, gf x) {
    std::string s = F.format(x);
    if (F.m() > 1 && x >= F.p()) s += F.format_coeffs(x);
    return s;
}

std::string format_list(const Field& F, const std::vector<gf>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += format_both(F, xs[i]);
    }
    return s;
}

FieldPtr resolve_field(const std::string& desc, std::uint32_t q) {
    if (!desc.empty() && q != 0)
        throw std::invalid_argument("give --field or --q, not both");
    if (!desc.empty()) return Field::parse(desc);
    if (q == 0)
        throw std::invalid_argument("a field is required: --field DESC or --q SIZE");
    if (q < 2) throw std::invalid_argument("--q must be a prime power >= 2");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    if (p == 0) p = q;
    std::uint32_t m = 0, rest = q;
    while (rest % p == 0) { rest /= p; ++m; }
    if (rest != 1)
        throw std::invalid_argument("--q must be a prime power");
    return Field::make(p, m);
}

struct CodeInput {
    std::optional<CodeSpec> spec;
    Matrix G;
};

CodeInput load_code(const std::string& spec_path, const std::string& matrix_path) {
    if (spec_path.empty() == matrix_path.empty())
        throw std::invalid_argument("give exactly one of --spec or --matrix");
    CodeInput in;
    if (!spec_path.empty()) {
        in.spec = read_spec(spec_path);
        in.G = generator(*in.spec);
    } else {
        in.G = read_matrix(matrix_path);
    }
    return in;
}

struct ConstructOpts {
    std::string field_desc;
    std::uint32_t q = 0;
    std::uint32_t k = 0;
    std::size_t n = 0;  // 0 means not given
    std::string b_tok, c_tok, l1_tok, l2_tok;
    std::uint32_t subgroup = 0;
    std::string mus;
    bool extended = false;
    std::string variant;
    std::string shape = "two-extended";
    std::string spec_out = "spec.json";
    std::string matrix_out = "generator.csv";
};

int run_construct(const ConstructOpts& o, Manifest& man) {
    FieldPtr field = resolve_field(o.field_desc, o.q);
    const Field& F = *field;

    CodeSpec spec;
    if (!o.variant.empty()) {
        if (!o.b_tok.empty() || !o.c_tok.empty() || !o.l1_tok.empty() ||
            !o.l2_tok.empty() || !o.mus.empty() || o.subgroup != 0)
            throw std::invalid_argument(
                "--variant fixes b, c, the subgroup, the mus and the twist "
                "scalars; drop those flags");
        spec = family_construct(field, o.k, variant_from_name(o.variant),
                                   shape_from_name(o.shape));
    } else if (!o.mus.empty()) {
        if (o.b_tok.empty() || o.c_tok.empty() || o.l1_tok.empty())
            throw std::invalid_argument("--mus needs --b, --c and --l1");
        std::vector<gf> lambdas{F.parse_element(o.l1_tok)};
        if (!o.l2_tok.empty()) lambdas.push_back(F.parse_element(o.l2_tok));
        spec = make_spec(field, o.k, F.parse_element(o.b_tok),
                         F.parse_element(o.c_tok), o.subgroup,
                         parse_uint_list(o.mus, "--mus"), lambdas, o.extended);
    } else {
        if (o.n == 0)
            throw std::invalid_argument("--n is required unless --mus or --variant picks the length");
        SearchChoices ch;
        if (!o.b_tok.empty()) ch.b = F.parse_element(o.b_tok);
        if (!o.c_tok.empty()) ch.c = F.parse_element(o.c_tok);
        if (o.subgroup != 0) ch.subgroup_order = o.subgroup;
        if (!o.l1_tok.empty()) {
            std::vector<gf> lambdas{F.parse_element(o.l1_tok)};
            if (!o.l2_tok.empty()) lambdas.push_back(F.parse_element(o.l2_tok));
            ch.lambdas = lambdas;
        } else if (!o.l2_tok.empty()) {
            throw std::invalid_argument("give --l1 before --l2");
        }
        if (o.extended) ch.extended = true;
        spec = search_spec(field, o.n, o.k, ch);
    }

    Matrix G = generator(spec);
    write_spec(o.spec_out, spec);
    write_matrix(o.matrix_out, G);

    std::cout << "constructed [" << spec.n() << "," << spec.k << "] over "
              << F.describe() << "\n"
              << "  b = " << format_both(F, spec.b)
              << "  c = " << format_both(F, spec.c)
              << "  twist scalars: " << format_list(F, spec.lambdas)
              << "  extended: " << (spec.extended ? "yes" : "no")
              << "  variant: " << variant_name(spec.variant) << "\n"
              << "  points: " << format_list(F, spec.points) << "\n"
              << "  wrote " << o.spec_out << " and " << o.matrix_out << "\n";

    man.parameters = json::parse(spec_to_json(spec));
    man.outputs = {o.spec_out, o.matrix_out};
    man.verdicts["constructed"] = true;
    return exit_from_verdicts(man.verdicts);
}

struct CertifyOpts {
    std::string spec_path, matrix_path;
    std::string mode = "both";
    bool criterion_only = false;
    unsigned jobs = 0;
    std::string out;
};

int run_certify(const CertifyOpts& o, Manifest& man) {
    std::string mode = o.criterion_only ? "criterion" : o.mode;
    CodeInput in = load_code(o.spec_path, o.matrix_path);

    CertificateReport rep;
    if (in.spec) {
        rep = certify(*in.spec, mode, o.jobs);
    } else {
        if (mode == "criterion")
            throw std::invalid_argument("criterion mode needs --spec; a bare matrix has no twist parameters");
        rep = certify_matrix(in.G, o.jobs);
    }

    std::string text = report_to_json(rep);
    std::cout << text << "\n";
    if (!o.out.empty()) {
        atomic_write(o.out, text + "\n");
        man.outputs = {o.out};
    }

    man.parameters["mode"] = mode;
    if (!o.spec_path.empty()) man.parameters["spec"] = o.spec_path;
    if (!o.matrix_path.empty()) man.parameters["matrix"] = o.matrix_path;
    if (o.jobs) man.parameters["jobs"] = o.jobs;
    man.verdicts["mds"] = rep.is_mds;
    man.verdicts["dual"] = rep.dual_ok;
    if (rep.non_grs) man.verdicts["non_grs"] = non_grs_name(*rep.non_grs);
    return exit_from_verdicts(man.verdicts);
}

struct DualOpts {
    std::string spec_path, matrix_path;
    std::string out = "parity.csv";
};

int run_dual(const DualOpts& o, Manifest& man) {
    CodeInput in = load_code(o.spec_path, o.matrix_path);

    bool closed = false;
    if (in.spec) {
        const CodeSpec& s = *in.spec;
        closed = s.lambdas.size() == 2 && s.points.size() >= s.k &&
                 (!s.extended || 2 * s.k <= s.n());
    }
    Matrix D = closed ? parity_closed_form(*in.spec) : dual_oracle(in.G);
    bool consistent = is_zero(mat_mul(D, transpose(in.G)));
    write_matrix(o.out, D);

    std::cout << "parity check: " << D.rows << " x " << D.cols << " ("
              << (closed ? "closed form" : "nullspace") << "), wrote "
              << o.out << "\n";

    if (!o.spec_path.empty()) man.parameters["spec"] = o.spec_path;
    if (!o.matrix_path.empty()) man.parameters["matrix"] = o.matrix_path;
    man.parameters["method"] = closed ? "closed-form" : "nullspace";
    man.outputs = {o.out};
    man.verdicts["dual"] = consistent;
    return exit_from_verdicts(man.verdicts);
}

struct EncodeOpts {
    std::string spec_path, matrix_path;
    std::string messages;
    std::string out = "codewords.txt";
};

int run_encode(const EncodeOpts& o, Manifest& man) {
    CodeInput in = load_code(o.spec_path, o.matrix_path);
    const Field& F = *in.G.field;

    CodewordStream stream;
    stream.field = in.G.field;
    stream.n = in.G.cols;
    stream.k = static_cast<std::uint32_t>(in.G.rows);

    std::istringstream lines(read_file(o.messages));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<gf> msg;
        for (const auto& tok : split_list(line)) msg.push_back(F.parse_element(tok));
        if (msg.size() != in.G.rows)
            throw std::invalid_argument("message line " + std::to_string(lineno) +
                                        " has " + std::to_string(msg.size()) +
                                        " symbols, expected " + std::to_string(in.G.rows));
        Codeword cw;
        cw.symbols = encode(in.G, msg);
        stream.words.push_back(std::move(cw));
    }
    if (stream.words.empty()) throw std::invalid_argument("no messages in " + o.messages);

    write_stream(o.out, stream);
    std::cout << "encoded " << stream.words.size() << " messages to " << o.out << "\n";

    if (!o.spec_path.empty()) man.parameters["spec"] = o.spec_path;
    if (!o.matrix_path.empty()) man.parameters["matrix"] = o.matrix_path;
    man.parameters["messages"] = o.messages;
    man.outputs = {o.out};
    man.verdicts["encoded"] = true;
    return exit_from_verdicts(man.verdicts);
}

struct DecodeOpts {
    std::string spec_path, matrix_path;
    std::string stream_path;
    std::string out = "decoded.txt";
};

int run_decode(const DecodeOpts& o, Manifest& man) {
    CodeInput in = load_code(o.spec_path, o.matrix_path);
    const Field& F = *in.G.field;
    CodewordStream stream = read_stream(o.stream_path);

    if (stream.field->describe() != F.describe())
        throw std::invalid_argument("stream field " + stream.field->describe() +
                                    " does not match the generator field " + F.describe());
    if (stream.n != in.G.cols || stream.k != in.G.rows)
        throw std::invalid_argument("stream shape [" + std::to_string(stream.n) + "," +
                                    std::to_string(stream.k) +
                                    "] does not match the generator");

    if (!o.spec_path.empty()) man.parameters["spec"] = o.spec_path;
    if (!o.matrix_path.empty()) man.parameters["matrix"] = o.matrix_path;
    man.parameters["stream"] = o.stream_path;

    std::string text;
    for (std::size_t i = 0; i < stream.words.size(); ++i) {
        std::vector<gf> msg;
        try {
            msg = erasure_decode(in.G, stream.words[i]);
        } catch (const std::runtime_error& e) {
            std::cout << "word " << i << ": " << e.what() << "\n";
            man.verdicts["decoded"] = false;
            man.parameters["failed_word"] = i;
            return 1;
        }
        for (std::size_t j = 0; j < msg.size(); ++j) {
            if (j) text += ',';
            text += F.format(msg[j]);
        }
        text += '\n';
    }

    atomic_write(o.out, text);
    std::cout << "decoded " << stream.words.size() << " codewords to " << o.out << "\n";
    man.outputs = {o.out};
    man.verdicts["decoded"] = true;
    return exit_from_verdicts(man.verdicts);
}

struct ReproduceOpts {
    int id = 0;
    std::string strict_modulus;
    unsigned jobs = 0;
    std::string matrix_out, parity_out;
};

int run_reproduce(const ReproduceOpts& o, Manifest& man) {
    ReferenceExample ref = reference_example(o.id);
    const std::vector<std::uint32_t> refmod = reference_modulus(o.id);

    CodeSpec spec;
    bool entry_exact = false;
    if (!o.strict_modulus.empty()) {
        auto coeffs = parse_uint_list(o.strict_modulus, "--strict-modulus");
        if (coeffs != refmod)
            throw std::invalid_argument(
                "entry-exact data for example " + std::to_string(o.id) +
                " is bound to modulus " + join_uints(refmod) +
                "; omit --strict-modulus for a parameter-level run");
        spec = ref.spec;
        entry_exact = true;
    } else {
        spec = reference_spec_canonical(o.id);
        entry_exact = spec.field->modulus() == refmod;
    }
    const Field& F = *spec.field;

    Matrix G = generator(spec);
    CertificateReport rep = certify(spec, "both", o.jobs);
    Matrix H = parity_closed_form(spec);
    SchurResult schur = schur_square(G);
    long long schur_d = min_distance_parity(schur.basis);

    bool ok_code = rep.is_mds && rep.n == ref.spec.n() && rep.k == ref.spec.k &&
                   rep.d && *rep.d == ref.d;
    bool ok_schur = rep.schur_dim == ref.schur_dim && schur_d == ref.schur_d;
    bool ok_nongrs = rep.non_grs && *rep.non_grs == NonGrs::NotEquivalent;
    bool ok_dual = rep.dual_ok;

    std::cout << "example " << o.id << " over " << F.describe() << "\n"
              << "  b = " << format_both(F, spec.b)
              << "  c = " << format_both(F, spec.c)
              << "  twist scalars: " << format_list(F, spec.lambdas) << "\n"
              << "  points: " << format_list(F, spec.points) << "\n"
              << "  code [" << rep.n << "," << rep.k << ","
              << (rep.d ? std::to_string(*rep.d) : "?") << "]  expected ["
              << ref.spec.n() << "," << ref.spec.k << "," << ref.d << "]  mds: "
              << (rep.is_mds ? "yes" : "NO") << "\n"
              << "  schur square [" << rep.n << "," << rep.schur_dim << ","
              << schur_d << "]  expected [" << ref.spec.n() << ","
              << ref.schur_dim << "," << ref.schur_d << "]\n"
              << "  grs-equivalent: "
              << (ok_nongrs ? "no (certified)" : "NOT CERTIFIED") << "  dual: "
              << (ok_dual ? "consistent" : "INCONSISTENT") << "\n";

    man.verdicts["code"] = ok_code;
    man.verdicts["schur"] = ok_schur;
    man.verdicts["non_grs"] = ok_nongrs;
    man.verdicts["dual"] = ok_dual;

    if (entry_exact) {
        bool ok_G = G == ref.G;
        bool ok_H = H == ref.H;
        std::cout << "  generator matches reference: " << (ok_G ? "yes" : "NO")
                  << "  parity matches reference: " << (ok_H ? "yes" : "NO") << "\n"
                  << "generator:\n" << matrix_to_csv(G);
        man.verdicts["entries"] = ok_G && ok_H;
    } else {
        std::cout << "  parameter-level run; entry data is bound to modulus "
                  << join_uints(refmod) << " (pass --strict-modulus "
                  << join_uints(refmod) << " to compare entries)\n";
    }

    if (!o.matrix_out.empty()) {
        write_matrix(o.matrix_out, G);
        man.outputs.push_back(o.matrix_out);
    }
    if (!o.parity_out.empty()) {
        write_matrix(o.parity_out, H);
        man.outputs.push_back(o.parity_out);
    }

    man.parameters["id"] = o.id;
    man.parameters["field"] = F.describe();
    man.parameters["entry_exact"] = entry_exact;
    return exit_from_verdicts(man.verdicts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted evaluation codes: construct, certify, dual, encode, decode, reproduce"};
    app.require_subcommand(1);

    std::string manifest_path;
    Manifest man;

    ConstructOpts co;
    auto* construct = app.add_subcommand("construct", "build a code spec and its generator matrix");
    construct->add_option("--field", co.field_desc, "field descriptor, e.g. GF(3^3)/1;2;0;1/0;1;0");
    construct->add_option("--q", co.q, "field size; picks the canonical field");
    construct->add_option("--k", co.k, "dimension")->required();
    construct->add_option("--n", co.n, "code length (search path)");
    construct->add_option("--b", co.b_tok, "first anchor");
    construct->add_option("--c", co.c_tok, "second anchor");
    construct->add_option("--subgroup", co.subgroup, "multiplicative subgroup order");
    construct->add_option("--mus", co.mus, "explicit mu exponents, comma separated (direct spec path)");
    construct->add_option("--l1", co.l1_tok, "first twist scalar");
    construct->add_option("--l2", co.l2_tok, "second twist scalar");
    construct->add_flag("--extended", co.extended, "append the (0,...,0,1) column");
    construct->add_option("--variant", co.variant, "odd-squares or even-cubics (maximal-length path)");
    construct->add_option("--shape", co.shape, "one-plain|one-extended|two-plain|two-extended (with --variant)");
    construct->add_option("--spec-out", co.spec_out, "spec output path");
    construct->add_option("--matrix-out", co.matrix_out, "generator output path (.csv or .json)");
    construct->add_option("--manifest", manifest_path, "also write the run manifest here");

    CertifyOpts ce;
    auto* certify_cmd = app.add_subcommand("certify", "check a code: distance, twist criteria, Schur square, dual");
    certify_cmd->add_option("--spec", ce.spec_path, "spec JSON input");
    certify_cmd->add_option("--matrix", ce.matrix_path, "generator matrix input");
    certify_cmd->add_option("--mode", ce.mode, "oracle, criterion, or both")
        ->check(CLI::IsMember({"oracle", "criterion", "both"}));
    certify_cmd->add_flag("--criterion-only", ce.criterion_only, "alias for --mode criterion");
    certify_cmd->add_option("--jobs", ce.jobs, "worker threads (0 = auto)");
    certify_cmd->add_option("-o,--out", ce.out, "also write the report here");
    certify_cmd->add_option("--manifest", manifest_path, "also write the run manifest here");

    DualOpts du;
    auto* dual_cmd = app.add_subcommand("dual", "emit a parity-check matrix");
    dual_cmd->add_option("--spec", du.spec_path, "spec JSON input");
    dual_cmd->add_option("--matrix", du.matrix_path, "generator matrix input");
    dual_cmd->add_option("-o,--out", du.out, "parity output path");
    dual_cmd->add_option("--manifest", manifest_path, "also write the run manifest here");

    EncodeOpts en;
    auto* encode_cmd = app.add_subcommand("encode", "encode messages into a codeword stream");
    encode_cmd->add_option("--spec", en.spec_path, "spec JSON input");
    encode_cmd->add_option("--matrix", en.matrix_path, "generator matrix input");
    encode_cmd->add_option("--messages", en.messages, "message file, one comma-separated message per line")->required();
    encode_cmd->add_option("-o,--out", en.out, "codeword stream output path");
    encode_cmd->add_option("--manifest", manifest_path, "also write the run manifest here");

    DecodeOpts de;
    auto* decode_cmd = app.add_subcommand("decode", "recover messages from a stream with erasures");
    decode_cmd->add_option("--spec", de.spec_path, "spec JSON input");
    decode_cmd->add_option("--matrix", de.matrix_path, "generator matrix input");
    decode_cmd->add_option("--stream", de.stream_path, "codeword stream input, ? marks erasures")->required();
    decode_cmd->add_option("-o,--out", de.out, "decoded message output path");
    decode_cmd->add_option("--manifest", manifest_path, "also write the run manifest here");

    ReproduceOpts re;
    auto* repro_cmd = app.add_subcommand("reproduce", "rebuild a bundled reference example and check it");
    repro_cmd->add_option("id", re.id, "example id: 1, 2 or 3")->required()
        ->check(CLI::Range(1, 3));
    repro_cmd->add_option("--strict-modulus", re.strict_modulus,
                          "modulus coefficients c0;c1;...;cm; must match the reference modulus");
    repro_cmd->add_option("--jobs", re.jobs, "worker threads (0 = auto)");
    repro_cmd->add_option("--matrix-out", re.matrix_out, "write the generator here");
    repro_cmd->add_option("--parity-out", re.parity_out, "write the parity check here");
    repro_cmd->add_option("--manifest", manifest_path, "also write the run manifest here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        if (rc == 0) return 0;
        man.exit_code = 2;
        man.error = e.get_name();
        emit_manifest(man, manifest_path);
        return 2;
    }

    try {
        if (*construct) {
            man.command = "construct";
            man.exit_code = run_construct(co, man);
        } else if (*certify_cmd) {
            man.command = "certify";
            man.exit_code = run_certify(ce, man);
        } else if (*dual_cmd) {
            man.command = "dual";
            man.exit_code = run_dual(du, man);
        } else if (*encode_cmd) {
            man.command = "encode";
            man.exit_code = run_encode(en, man);
        } else if (*decode_cmd) {
            man.command = "decode";
            man.exit_code = run_decode(de, man);
        } else if (*repro_cmd) {
            man.command = "reproduce";
            man.exit_code = run_reproduce(re, man);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        man.error = e.what();
        man.exit_code = 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        man.error = e.what();
        man.exit_code = 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal: " << e.what() << "\n";
        man.error = std::string("internal: ") + e.what();
        man.exit_code = 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        man.error = e.what();
        man.exit_code = 1;
    }

    emit_manifest(man, manifest_path);
    return man.exit_code;
}
