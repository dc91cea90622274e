#include "coltrs/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace coltrs {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

std::size_t parse_count(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        std::size_t v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + tok + "' in header");
    }
}

std::string extension_of(const std::string& path) {
    auto dot = path.rfind('.');
    return dot == std::string::npos ? "" : path.substr(dot + 1);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::stringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return ss.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out) throw IoError("write failure on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move " + tmp + " into place at " + path);
    }
}

std::string matrix_to_csv(const Matrix& M) {
    std::string out = M.field->describe() + "," + std::to_string(M.rows) + "," +
                      std::to_string(M.cols) + "\n";
    for (std::size_t r = 0; r < M.rows; ++r) {
        for (std::size_t c = 0; c < M.cols; ++c) {
            if (c) out += ',';
            out += M.field->format(M.at(r, c));
        }
        out += '\n';
    }
    return out;
}

Matrix matrix_from_csv(const std::string& text) {
    auto ls = lines_of(text);
    if (ls.empty()) throw std::invalid_argument("empty matrix file");
    auto head = split(ls[0], ',');
    if (head.size() != 3) throw std::invalid_argument("matrix CSV header needs field,rows,cols");
    FieldPtr field = Field::parse(head[0]);
    std::size_t rows = parse_count(head[1], "row count"), cols = parse_count(head[2], "column count");
    if (ls.size() != rows + 1) throw std::invalid_argument("matrix CSV row count mismatch");
    Matrix M(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto toks = split(ls[r + 1], ',');
        if (toks.size() != cols) throw std::invalid_argument("matrix CSV column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) M.at(r, c) = field->parse_element(toks[c]);
    }
    return M;
}

std::string matrix_to_json(const Matrix& M) {
    json j;
    j["field"] = M.field->describe();
    j["rows"] = M.rows;
    j["cols"] = M.cols;
    json entries = json::array();
    for (std::size_t r = 0; r < M.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < M.cols; ++c) row.push_back(M.field->format(M.at(r, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

Matrix matrix_from_json(const std::string& text) {
    json j = parse_json(text);
    try {
        FieldPtr field = Field::parse(j.at("field").get<std::string>());
        std::size_t rows = j.at("rows").get<std::size_t>();
        std::size_t cols = j.at("cols").get<std::size_t>();
        const json& entries = j.at("entries");
        if (entries.size() != rows) throw std::invalid_argument("matrix JSON row count mismatch");
        Matrix M(field, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (entries[r].size() != cols)
                throw std::invalid_argument("matrix JSON column count mismatch");
            for (std::size_t c = 0; c < cols; ++c)
                M.at(r, c) = field->parse_element(entries[r][c].get<std::string>());
        }
        return M;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
}

Matrix read_matrix(const std::string& path) {
    const std::string ext = extension_of(path);
    if (ext == "csv") return matrix_from_csv(read_file(path));
    if (ext == "json") return matrix_from_json(read_file(path));
    throw std::invalid_argument("matrix files must end in .csv or .json");
}

void write_matrix(const std::string& path, const Matrix& M) {
    const std::string ext = extension_of(path);
    if (ext == "csv")
        atomic_write(path, matrix_to_csv(M));
    else if (ext == "json")
        atomic_write(path, matrix_to_json(M));
    else
        throw std::invalid_argument("matrix files must end in .csv or .json");
}

std::string spec_to_json(const CodeSpec& spec) {
    json j;
    j["field"] = spec.field->describe();
    j["k"] = spec.k;
    j["b"] = spec.field->format(spec.b);
    j["c"] = spec.field->format(spec.c);
    j["subgroup_order"] = spec.subgroup_order;
    j["mu_exponents"] = spec.mu_exponents;
    json lams = json::array();
    for (gf l : spec.lambdas) lams.push_back(spec.field->format(l));
    j["lambdas"] = std::move(lams);
    j["extended"] = spec.extended;
    j["variant"] = variant_name(spec.variant);
    return j.dump(2) + "\n";
}

CodeSpec spec_from_json(const std::string& text) {
    json j = parse_json(text);
    try {
        FieldPtr field = Field::parse(j.at("field").get<std::string>());
        std::vector<gf> lambdas;
        for (const auto& t : j.at("lambdas"))
            lambdas.push_back(field->parse_element(t.get<std::string>()));
        return make_spec(field, j.at("k").get<std::uint32_t>(),
                         field->parse_element(j.at("b").get<std::string>()),
                         field->parse_element(j.at("c").get<std::string>()),
                         j.at("subgroup_order").get<std::uint32_t>(),
                         j.at("mu_exponents").get<std::vector<std::uint32_t>>(), lambdas,
                         j.at("extended").get<bool>(),
                         variant_from_name(j.at("variant").get<std::string>()));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed spec JSON: ") + e.what());
    }
}

CodeSpec read_spec(const std::string& path) { return spec_from_json(read_file(path)); }

void write_spec(const std::string& path, const CodeSpec& spec) {
    atomic_write(path, spec_to_json(spec));
}

std::string report_to_json(const CertificateReport& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    if (r.d)
        j["d"] = *r.d;
    else
        j["d"] = nullptr;
    j["is_mds"] = r.is_mds;
    j["witness"] = r.witness;
    j["schur_dim"] = r.schur_dim;
    if (!r.non_grs)
        j["non_grs"] = nullptr;
    else if (*r.non_grs == NonGrs::NotEquivalent)
        j["non_grs"] = true;
    else
        j["non_grs"] = "inconclusive";
    j["dual_ok"] = r.dual_ok;
    j["mode"] = r.mode;
    return j.dump(2) + "\n";
}

std::string stream_to_text(const CodewordStream& s) {
    std::string out = s.field->describe() + "," + std::to_string(s.n) + "," +
                      std::to_string(s.k) + "\n";
    for (const auto& w : s.words) {
        for (std::size_t j = 0; j < s.n; ++j) {
            if (j) out += ',';
            const bool gone = !w.erased.empty() && w.erased[j];
            out += gone ? "?" : s.field->format(w.symbols[j]);
        }
        out += '\n';
    }
    return out;
}

CodewordStream stream_from_text(const std::string& text) {
    auto ls = lines_of(text);
    if (ls.empty()) throw std::invalid_argument("empty symbol stream");
    auto head = split(ls[0], ',');
    if (head.size() != 3) throw std::invalid_argument("stream header needs field,n,k");
    CodewordStream s;
    s.field = Field::parse(head[0]);
    s.n = parse_count(head[1], "length");
    s.k = static_cast<std::uint32_t>(parse_count(head[2], "dimension"));
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto toks = split(ls[i], ',');
        if (toks.size() != s.n)
            throw std::invalid_argument("stream line has wrong symbol count");
        Codeword w;
        w.symbols.assign(s.n, 0);
        w.erased.assign(s.n, 0);
        bool any_erased = false;
        for (std::size_t j = 0; j < s.n; ++j) {
            if (toks[j] == "?") {
                w.erased[j] = 1;
                any_erased = true;
            } else {
                w.symbols[j] = s.field->parse_element(toks[j]);
            }
        }
        if (!any_erased) w.erased.clear();
        s.words.push_back(std::move(w));
    }
    return s;
}

CodewordStream read_stream(const std::string& path) {
    return stream_from_text(read_file(path));
}

void write_stream(const std::string& path, const CodewordStream& s) {
    atomic_write(path, stream_to_text(s));
}

}  // namespace coltrs
