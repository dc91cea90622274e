#pragma once

#include <stdexcept>
#include <string>

#include "coltrs/certify.hpp"
#include "coltrs/codec.hpp"
#include "coltrs/construct.hpp"
#include "coltrs/gfmatrix.hpp"

namespace coltrs {

// File-level failures (missing, unreadable, unwritable).  Malformed
// content throws std::invalid_argument instead.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
// Writes via a temp file in the same directory plus rename, so a crash
// never leaves a half-written file behind.
void atomic_write(const std::string& path, const std::string& content);

// Matrix CSV: header line "field-desc,rows,cols", then one row of element
// tokens per line.  Matrix JSON: {field, rows, cols, entries} with
// entries as nested token arrays.  Both round-trip bit-exactly.
std::string matrix_to_csv(const Matrix& M);
Matrix matrix_from_csv(const std::string& text);
std::string matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const std::string& text);

// Dispatch on extension: .csv or .json.
Matrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const Matrix& M);

// Spec JSON: {field, k, b, c, subgroup_order, mu_exponents, lambdas,
// extended, variant}.  Points are re-derived on load.
std::string spec_to_json(const CodeSpec& spec);
CodeSpec spec_from_json(const std::string& text);
CodeSpec read_spec(const std::string& path);
void write_spec(const std::string& path, const CodeSpec& spec);

std::string report_to_json(const CertificateReport& r);

// Symbol stream: header line "field-desc,n,k", then one codeword per
// line as comma-separated element tokens with "?" marking erasures.
struct CodewordStream {
    FieldPtr field;
    std::size_t n = 0;
    std::uint32_t k = 0;
    std::vector<Codeword> words;
};

std::string stream_to_text(const CodewordStream& s);
CodewordStream stream_from_text(const std::string& text);
CodewordStream read_stream(const std::string& path);
void write_stream(const std::string& path, const CodewordStream& s);

}  // namespace coltrs
