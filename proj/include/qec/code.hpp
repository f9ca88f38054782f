#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qec/pauli.hpp"

namespace qec {

enum class CodeName { five_qubit, seven_qubit_set1, seven_qubit_set2 };

std::string_view to_string(CodeName name);
CodeName code_name_from_string(std::string_view text);  // throws on unknown name

/// (n-k)-bit error syndrome; bit of row 1 is the most significant, matching
/// the printed l_1...l_{n-k} order of the syndrome tables.
struct Syndrome {
    std::uint32_t bits = 0;
    int width = 0;

    std::string to_string() const;
    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

/// Check matrix stored as printed: row j = (x_block_j | z_block_j), where
/// the leftmost printed column is qubit 1 (bit 0). The syndrome of an error
/// (a|b) has bit j = <x_block_j, a> + <z_block_j, b> mod 2, so the row's
/// X block pairs with the error's X part. Equivalently, row j represents the
/// stabilizer element with Z-part x_block_j and X-part z_block_j.
struct CheckMatrix {
    int n = 0;
    std::vector<std::uint32_t> x_block;
    std::vector<std::uint32_t> z_block;

    /// The Pauli class of row j under the pairing above.
    PauliString row_class(std::size_t j) const;
};

/// A concrete stabilizer code together with one designated correctable set
/// and the syndrome -> correction table realizing its recovery operation.
struct CodeSpec {
    std::string name;
    int n = 0, k = 0, d = 0;

    /// Generator list in the conventional presentation. For the five-qubit
    /// code this spans the same group as the check-matrix rows (different
    /// basis); for the seven-qubit code the check matrix follows the
    /// reversed qubit labeling, so the two spans are mirror images. All
    /// syndrome arithmetic uses the check matrix, which is what the golden
    /// syndrome tables are written against.
    std::vector<PauliString> generators;

    CheckMatrix check;

    /// 2^(n-k) designated correctable representatives, in table order,
    /// identity first.
    std::vector<PauliString> correctable;

    /// Correction indexed by syndrome value; total over all 2^(n-k)
    /// syndromes. For the two strict sets this is a bijection onto
    /// `correctable`. The Z-priority set has colliding syndromes (each
    /// ZZ pair shares its syndrome with a single-Z error), so there the
    /// table keeps the minimum-weight member of each collision class and
    /// falls back to the standard CSS corrections for syndromes the set
    /// never reaches.
    std::vector<PauliString> recovery_table;

    /// Membership mask over packed Pauli keys (size 4^n).
    std::vector<bool> correctable_mask;

    /// Row-reduced basis of the check rows' Pauli classes, packed keys.
    std::vector<std::uint32_t> stabilizer_rref;

    bool is_correctable_member(const PauliString& e) const {
        return correctable_mask[e.key()];
    }
};

/// Builds one of the three registered codes. Construction re-derives the
/// syndrome structure and fails with a diagnostic std::logic_error if the
/// transcribed tables are inconsistent (duplicate syndromes where the set
/// claims distinctness, non-commuting generators, wrong set sizes).
CodeSpec build_code(CodeName name);

/// Cached immutable instance (thread-safe after first use).
const CodeSpec& get_code(CodeName name);

Syndrome syndrome_of(const CodeSpec& code, const PauliString& e);

PauliString recovery_for_syndrome(const CodeSpec& code, const Syndrome& s);

/// True iff e lies in the F2 row span of the check matrix (decided against
/// the row-reduced basis). Zero-syndrome errors are logical identity iff
/// they are members.
bool is_in_stabilizer_group(const CodeSpec& code, const PauliString& e);

struct DetectabilityReport {
    bool pass = true;
    std::size_t pairs_checked = 0;
    struct Violation {
        PauliString first, second, product;
    };
    std::vector<Violation> violations;
};

/// For every ordered pair (l, k), l != k, checks that the product e_l*e_k
/// either has nonzero syndrome or lies in the stabilizer group.
DetectabilityReport detectability_check(const CodeSpec& code, std::span<const PauliString> set);

nlohmann::json to_json(const CodeSpec& code);

}  // namespace qec
