#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segalkit {

/// Raised when input data is not a well-formed instance of the requested
/// structure (dangling references, wrong arity, inconsistent tables).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is invoked outside its contract (e.g. a
/// construction that requires the Segal property on an instance that
/// does not have it, or a non-neutral critical edge).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a uniqueness assumption fails in the middle of a staged
/// construction. On inputs that satisfy the documented preconditions this
/// never fires; if it does, it names the offending sub-horn.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimal locator for a failed check: a kind tag plus named integers
/// (simplex ids, horn positions, counts) and an optional face tuple.
struct Witness {
    std::string kind;
    std::vector<std::pair<std::string, std::int64_t>> data;
    std::vector<int> faces;  // face tuple of a horn/boundary, -1 = missing slot
    std::string note;

    Witness() = default;
    Witness(std::string k, std::vector<std::pair<std::string, std::int64_t>> d,
            std::vector<int> f = {}, std::string n = {})
        : kind(std::move(k)), data(std::move(d)), faces(std::move(f)), note(std::move(n)) {}
};

/// Verdict of a decision procedure together with a minimal witness on
/// failure and optional statistics (horns scanned, fillers found, ...).
struct CheckReport {
    std::string check;
    bool verdict = false;
    bool structural = false;  // failure caused by malformed data, not by a violated law
    std::optional<Witness> witness;
    std::vector<std::pair<std::string, std::int64_t>> counts;

    explicit operator bool() const { return verdict; }

    CheckReport& count(std::string key, std::int64_t value) {
        counts.emplace_back(std::move(key), value);
        return *this;
    }

    static CheckReport pass(std::string name) {
        CheckReport r;
        r.check = std::move(name);
        r.verdict = true;
        return r;
    }

    static CheckReport fail(std::string name, Witness w, bool structural = false) {
        CheckReport r;
        r.check = std::move(name);
        r.verdict = false;
        r.structural = structural;
        r.witness = std::move(w);
        return r;
    }
};

}  // namespace segalkit
