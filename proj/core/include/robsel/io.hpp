#ifndef ROBSEL_IO_HPP
#define ROBSEL_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "robsel/instance.hpp"

namespace robsel {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, const std::string& message)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
          file_(std::move(file)),
          line_(line) {}
    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

/// Manifest/instance hash disagreement or missing sidecar.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical comma-separated body of an instance. This is the byte sequence
/// that is hashed, written to disk and compared in determinism checks.
std::string canonical_bytes(const ProblemInstance& inst);

/// FNV-1a 64-bit hash of a byte string, as 16 hex digits.
std::string content_hash(const std::string& bytes);

/// Path of the manifest sidecar for an instance file.
std::string manifest_path(const std::string& instance_path);

/// Writes the instance file and its manifest sidecar atomically
/// (temp file + rename). Returns the paths written.
std::vector<std::string> write_instance(const ProblemInstance& inst, const std::string& path);

/// Exact inverse of write_instance. Throws ParseError on malformed files,
/// IntegrityError on a missing manifest or hash mismatch.
ProblemInstance read_instance(const std::string& path);

/// One benchmark row.
struct ResultRecord {
    std::string instance_id;
    std::string generator;
    int n = 0;
    int p = 0;
    int N = 0;                     // 0 = not applicable
    std::optional<Rational> gamma;
    std::optional<std::int64_t> delta;
    std::optional<Rational> hiro_b;
    std::string hiro_mode;         // empty = not hardened
    std::string status;
    std::optional<Rational> objective_exact;
    double objective = 0.0;
    double wall_time_seconds = 0.0;
    std::int64_t nodes = 0;
    std::uint64_t seed = 0;
};

/// Results CSV with the fixed column order
/// instance_id,generator,n,p,N,gamma,delta,b,hiro_mode,status,objective,wall_time_s,nodes,seed
void write_results(const std::vector<ResultRecord>& records, const std::string& path);

} // namespace robsel

#endif
