#include "qec/code.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qec {

namespace {

std::uint32_t bits_from_row(std::string_view row) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == '1') v |= 1u << i;  // leftmost printed column = qubit 1 = bit 0
    }
    return v;
}

CheckMatrix make_check(int n, std::span<const std::string_view> x_rows,
                       std::span<const std::string_view> z_rows) {
    CheckMatrix check;
    check.n = n;
    for (auto r : x_rows) check.x_block.push_back(bits_from_row(r));
    for (auto r : z_rows) check.z_block.push_back(bits_from_row(r));
    return check;
}

std::vector<PauliString> parse_all(int n, std::span<const std::string_view> names) {
    std::vector<PauliString> out;
    out.reserve(names.size());
    for (auto nm : names) out.push_back(parse_pauli(n, nm));
    return out;
}

/// Weight-0 and weight-1 representatives shared by every set: identity, then
/// X, Y, Z sweeps across the qubits in table order.
std::vector<PauliString> weight_le1_set(int n) {
    std::vector<PauliString> out;
    out.push_back(PauliString::identity(n));
    for (char letter : {'X', 'Y', 'Z'}) {
        for (int q = 1; q <= n; ++q) {
            const std::pair<int, char> one[] = {{q, letter}};
            out.push_back(PauliString::from_letters(n, one));
        }
    }
    return out;
}

/// The 42 weight-2 representatives of the standard CSS table: one X and one
/// Z on distinct qubits, every ordered (X-position, Z-position) pair,
/// grouped by X position.
std::vector<PauliString> css_weight2_set() {
    std::vector<PauliString> out;
    for (int m = 1; m <= 7; ++m) {
        for (int j = 1; j <= 7; ++j) {
            if (j == m) continue;
            const std::pair<int, char> two[] = {{m, 'X'}, {j, 'Z'}};
            out.push_back(PauliString::from_letters(7, two));
        }
    }
    return out;
}

/// Z-priority weight-2 representatives: all 21 ZZ pairs, then the 21 ZX
/// pairs with the Z on the lower qubit index.
std::vector<PauliString> z_priority_weight2_set() {
    std::vector<PauliString> out;
    for (int i = 1; i <= 7; ++i) {
        for (int j = i + 1; j <= 7; ++j) {
            const std::pair<int, char> two[] = {{i, 'Z'}, {j, 'Z'}};
            out.push_back(PauliString::from_letters(7, two));
        }
    }
    for (int i = 1; i <= 7; ++i) {
        for (int j = i + 1; j <= 7; ++j) {
            const std::pair<int, char> two[] = {{i, 'Z'}, {j, 'X'}};
            out.push_back(PauliString::from_letters(7, two));
        }
    }
    return out;
}

std::vector<std::uint32_t> reduce_rows(const CheckMatrix& check) {
    // Gaussian elimination over F2 on the packed row classes; basis entries
    // keep distinct leading bits.
    std::vector<std::uint32_t> basis;
    for (std::size_t j = 0; j < check.x_block.size(); ++j) {
        std::uint32_t v = check.row_class(j).key();
        for (std::uint32_t row : basis) {
            v = std::min(v, v ^ row);
        }
        if (v != 0) basis.push_back(v);
        std::sort(basis.begin(), basis.end(), std::greater<>());
    }
    return basis;
}

bool in_span(const std::vector<std::uint32_t>& rref, std::uint32_t v) {
    for (std::uint32_t row : rref) {
        v = std::min(v, v ^ row);
    }
    return v == 0;
}

void fill_recovery_strict(CodeSpec& code) {
    const std::size_t size = std::size_t{1} << (code.n - code.k);
    code.recovery_table.assign(size, PauliString::identity(code.n));
    std::vector<bool> seen(size, false);
    std::vector<PauliString> owner(size, PauliString::identity(code.n));
    for (const auto& e : code.correctable) {
        const std::uint32_t s = syndrome_of(code, e).bits;
        if (seen[s]) {
            throw std::logic_error("duplicate syndrome in correctable set of " + code.name + ": " +
                                   to_string(owner[s]) + " and " + to_string(e) + " both map to " +
                                   Syndrome{s, code.n - code.k}.to_string());
        }
        seen[s] = true;
        owner[s] = e;
        code.recovery_table[s] = e;
    }
    // 2^(n-k) distinct syndromes over 2^(n-k) elements: the table is total.
    for (std::size_t s = 0; s < size; ++s) {
        if (!seen[s]) {
            throw std::logic_error("syndrome " + Syndrome{static_cast<std::uint32_t>(s), code.n - code.k}.to_string() +
                                   " unreachable in " + code.name);
        }
    }
}

void fill_recovery_z_priority(CodeSpec& code) {
    // Collision classes get their minimum-weight member (the single-Z error
    // beats the three ZZ pairs sharing its syndrome). Syndromes never hit by
    // the set fall back to the standard CSS corrections.
    const std::size_t size = std::size_t{1} << (code.n - code.k);
    code.recovery_table.assign(size, PauliString::identity(code.n));
    std::vector<int> best_weight(size, -1);
    for (const auto& e : code.correctable) {
        const std::uint32_t s = syndrome_of(code, e).bits;
        const int w = weight(e);
        if (best_weight[s] == -1 || w < best_weight[s]) {
            best_weight[s] = w;
            code.recovery_table[s] = e;
        } else if (w == best_weight[s]) {
            throw std::logic_error("ambiguous minimum-weight correction for syndrome " +
                                   Syndrome{s, code.n - code.k}.to_string() + " in " + code.name);
        }
    }
    std::vector<PauliString> fallback = weight_le1_set(7);
    const auto w2 = css_weight2_set();
    fallback.insert(fallback.end(), w2.begin(), w2.end());
    for (const auto& e : fallback) {
        const std::uint32_t s = syndrome_of(code, e).bits;
        if (best_weight[s] == -1) {
            best_weight[s] = weight(e);
            code.recovery_table[s] = e;
        }
    }
    for (std::size_t s = 0; s < size; ++s) {
        if (best_weight[s] == -1) {
            throw std::logic_error("syndrome " + Syndrome{static_cast<std::uint32_t>(s), code.n - code.k}.to_string() +
                                   " has no correction in " + code.name);
        }
    }
}

void finalize(CodeSpec& code, bool strict_table) {
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < code.generators.size(); ++j) {
            if (symplectic_product(code.generators[i], code.generators[j]) != 0) {
                throw std::logic_error("generators " + to_string(code.generators[i]) + " and " +
                                       to_string(code.generators[j]) + " of " + code.name +
                                       " do not commute");
            }
        }
    }
    const std::size_t expected = std::size_t{1} << (code.n - code.k);
    if (code.correctable.size() != expected) {
        throw std::logic_error(code.name + ": correctable set has " +
                               std::to_string(code.correctable.size()) + " elements, expected " +
                               std::to_string(expected));
    }
    if (!code.correctable.front().is_identity()) {
        throw std::logic_error(code.name + ": correctable set must start with the identity");
    }
    code.stabilizer_rref = reduce_rows(code.check);
    if (strict_table) {
        fill_recovery_strict(code);
    } else {
        fill_recovery_z_priority(code);
    }
    code.correctable_mask.assign(std::size_t{1} << (2 * code.n), false);
    for (const auto& e : code.correctable) code.correctable_mask[e.key()] = true;
}

constexpr std::string_view kGen5[] = {"X1Z2Z3X4", "X2Z3Z4X5", "X1X3Z4Z5", "Z1X2X4Z5"};
constexpr std::string_view kCheck5X[] = {"11000", "01100", "00110", "00011"};
constexpr std::string_view kCheck5Z[] = {"00101", "10010", "01001", "10100"};

constexpr std::string_view kGen7[] = {"X4X5X6X7", "X2X3X6X7", "X1X3X5X7",
                                      "Z4Z5Z6Z7", "Z2Z3Z6Z7", "Z1Z3Z5Z7"};
constexpr std::string_view kCheck7X[] = {"1111000", "1100110", "1010101",
                                         "0000000", "0000000", "0000000"};
constexpr std::string_view kCheck7Z[] = {"0000000", "0000000", "0000000",
                                         "1111000", "1100110", "1010101"};

}  // namespace

PauliString CheckMatrix::row_class(std::size_t j) const {
    return PauliString::from_xz(n, z_block[j], x_block[j]);
}

std::string_view to_string(CodeName name) {
    switch (name) {
        case CodeName::five_qubit: return "five_qubit";
        case CodeName::seven_qubit_set1: return "seven_qubit_set1";
        case CodeName::seven_qubit_set2: return "seven_qubit_set2";
    }
    throw std::logic_error("unreachable code name");
}

CodeName code_name_from_string(std::string_view text) {
    if (text == "five_qubit" || text == "five") return CodeName::five_qubit;
    if (text == "seven_qubit_set1" || text == "set1") return CodeName::seven_qubit_set1;
    if (text == "seven_qubit_set2" || text == "set2") return CodeName::seven_qubit_set2;
    throw std::invalid_argument("unknown code name \"" + std::string(text) +
                                "\" (expected five|set1|set2)");
}

std::string Syndrome::to_string() const {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((bits >> (width - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

CodeSpec build_code(CodeName name) {
    CodeSpec code;
    switch (name) {
        case CodeName::five_qubit: {
            code.name = "five_qubit";
            code.n = 5; code.k = 1; code.d = 3;
            code.generators = parse_all(5, kGen5);
            code.check = make_check(5, kCheck5X, kCheck5Z);
            code.correctable = weight_le1_set(5);
            finalize(code, /*strict_table=*/true);
            break;
        }
        case CodeName::seven_qubit_set1: {
            code.name = "seven_qubit_set1";
            code.n = 7; code.k = 1; code.d = 3;
            code.generators = parse_all(7, kGen7);
            code.check = make_check(7, kCheck7X, kCheck7Z);
            code.correctable = weight_le1_set(7);
            const auto w2 = css_weight2_set();
            code.correctable.insert(code.correctable.end(), w2.begin(), w2.end());
            finalize(code, /*strict_table=*/true);
            break;
        }
        case CodeName::seven_qubit_set2: {
            code.name = "seven_qubit_set2";
            code.n = 7; code.k = 1; code.d = 3;
            code.generators = parse_all(7, kGen7);
            code.check = make_check(7, kCheck7X, kCheck7Z);
            code.correctable = weight_le1_set(7);
            const auto w2 = z_priority_weight2_set();
            code.correctable.insert(code.correctable.end(), w2.begin(), w2.end());
            finalize(code, /*strict_table=*/false);
            break;
        }
    }
    return code;
}

const CodeSpec& get_code(CodeName name) {
    static std::once_flag flags[3];
    static CodeSpec codes[3];
    const auto i = static_cast<std::size_t>(name);
    std::call_once(flags[i], [&] { codes[i] = build_code(name); });
    return codes[i];
}

Syndrome syndrome_of(const CodeSpec& code, const PauliString& e) {
    if (e.n != code.n) {
        throw std::invalid_argument("error acts on " + std::to_string(e.n) + " qubits, code has " +
                                    std::to_string(code.n));
    }
    std::uint32_t bits = 0;
    const std::size_t rows = code.check.x_block.size();
    for (std::size_t j = 0; j < rows; ++j) {
        const int bit =
            (std::popcount(code.check.x_block[j] & e.a) ^ std::popcount(code.check.z_block[j] & e.b)) & 1;
        bits = (bits << 1) | static_cast<std::uint32_t>(bit);
    }
    return Syndrome{bits, static_cast<int>(rows)};
}

PauliString recovery_for_syndrome(const CodeSpec& code, const Syndrome& s) {
    if (s.width != code.n - code.k) {
        throw std::invalid_argument("syndrome has " + std::to_string(s.width) + " bits, expected " +
                                    std::to_string(code.n - code.k));
    }
    return code.recovery_table[s.bits];
}

bool is_in_stabilizer_group(const CodeSpec& code, const PauliString& e) {
    if (e.n != code.n) {
        throw std::invalid_argument("length mismatch in stabilizer membership");
    }
    return in_span(code.stabilizer_rref, e.key());
}

DetectabilityReport detectability_check(const CodeSpec& code, std::span<const PauliString> set) {
    DetectabilityReport report;
    for (std::size_t l = 0; l < set.size(); ++l) {
        for (std::size_t k = 0; k < set.size(); ++k) {
            if (l == k) continue;
            ++report.pairs_checked;
            const PauliString product = multiply(set[l], set[k]);
            if (syndrome_of(code, product).bits != 0) continue;
            if (is_in_stabilizer_group(code, product)) continue;
            report.pass = false;
            report.violations.push_back({set[l], set[k], product});
        }
    }
    return report;
}

nlohmann::json to_json(const CodeSpec& code) {
    nlohmann::json j;
    j["schema"] = 1;
    j["name"] = code.name;
    j["n"] = code.n;
    j["k"] = code.k;
    j["d"] = code.d;
    for (const auto& g : code.generators) j["generators"].push_back(to_string(g));
    for (std::size_t r = 0; r < code.check.x_block.size(); ++r) {
        std::string row;
        for (int q = 0; q < code.n; ++q) row += ((code.check.x_block[r] >> q) & 1u) ? '1' : '0';
        row += '|';
        for (int q = 0; q < code.n; ++q) row += ((code.check.z_block[r] >> q) & 1u) ? '1' : '0';
        j["check_matrix"].push_back(row);
    }
    for (const auto& e : code.correctable) j["correctable"].push_back(to_string(e));
    nlohmann::json table = nlohmann::json::object();
    for (std::size_t s = 0; s < code.recovery_table.size(); ++s) {
        table[Syndrome{static_cast<std::uint32_t>(s), code.n - code.k}.to_string()] =
            to_string(code.recovery_table[s]);
    }
    j["recovery_table"] = std::move(table);
    return j;
}

}  // namespace qec
