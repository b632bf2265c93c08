#include "hsubdiv/mask.hpp"

#include "hsubdiv/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>

namespace hsubdiv {

int HermiteMask::lo() const {
    if (matrices.empty()) {
        throw InputError("mask has empty support");
    }
    return matrices.begin()->first;
}

int HermiteMask::hi() const {
    if (matrices.empty()) {
        throw InputError("mask has empty support");
    }
    return matrices.rbegin()->first;
}

Matrix HermiteMask::coeff(int l) const {
    const auto it = matrices.find(l);
    if (it == matrices.end()) {
        return Matrix(d, d);
    }
    return it->second;
}

void HermiteMask::validate_shape() const {
    if (d != 2 && d != 3) {
        throw InputError("mask order d must be 2 or 3, got " + std::to_string(d));
    }
    if (matrices.empty()) {
        throw InputError("mask has empty support");
    }
    for (const auto& [l, m] : matrices) {
        if (m.rows() != d || m.cols() != d) {
            throw InputError("mask matrix at offset " + std::to_string(l) + " is " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             ", expected " + std::to_string(d) + "x" + std::to_string(d));
        }
    }
}

void HermiteMask::validate() const {
    validate_shape();
    const bool any_nonzero = std::any_of(matrices.begin(), matrices.end(),
                                         [](const auto& kv) { return !kv.second.is_zero(); });
    if (!any_nonzero) {
        throw InputError("mask has no nonzero matrix");
    }
}

namespace {

void require_z(int z) {
    if (z != 1 && z != -1) {
        throw InputError("symbol evaluation is restricted to z = +1 or z = -1");
    }
}

// (-1)^e for possibly negative e
int sign_pow(int base_is_minus_one_exp) {
    return (base_is_minus_one_exp % 2 == 0) ? 1 : -1;
}

Matrix symbol_sum(const HermiteMask& mask, int k, int z, int parity_filter /* -1: all */) {
    Matrix acc(mask.d, mask.d);
    for (const auto& [l, m] : mask.matrices) {
        if (parity_filter >= 0 && ((l % 2 + 2) % 2) != parity_filter) {
            continue;
        }
        const Int w = falling_factorial(Int(l), k);
        if (w == 0) {
            continue;
        }
        Rational weight(w);
        if (z == -1) {
            weight *= sign_pow(l - k);
        }
        acc = acc + weight * m;
    }
    return acc;
}

} // namespace

Matrix symbol_deriv(const HermiteMask& mask, int k, int z) {
    require_z(z);
    if (k < 0) {
        throw InputError("symbol derivative order must be >= 0");
    }
    return symbol_sum(mask, k, z, -1);
}

Matrix subsymbol_deriv(const HermiteMask& mask, Parity parity, int k, int z) {
    require_z(z);
    if (k < 0) {
        throw InputError("symbol derivative order must be >= 0");
    }
    return symbol_sum(mask, k, z, parity == Parity::Even ? 0 : 1);
}

namespace {

using json = nlohmann::ordered_json;

int parse_offset(const std::string& key) {
    int value = 0;
    const char* first = key.data();
    const char* last = key.data() + key.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
        throw InputError("mask offset key '" + key + "' is not a decimal integer");
    }
    return value;
}

} // namespace

HermiteMask load_mask(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("mask document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InputError("mask document must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "d" && key != "name" && key != "tau" && key != "matrices") {
            throw InputError("unknown field '" + key + "' in mask document");
        }
    }
    if (!doc.contains("d") || !doc["d"].is_number_integer()) {
        throw InputError("mask document needs an integer field \"d\"");
    }
    HermiteMask mask;
    mask.d = doc["d"].get<int>();
    if (mask.d != 2 && mask.d != 3) {
        throw InputError("mask order d must be 2 or 3, got " + std::to_string(mask.d));
    }
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw InputError("mask field \"name\" must be a string");
        }
        mask.name = doc["name"].get<std::string>();
    }
    if (doc.contains("tau")) {
        if (!doc["tau"].is_string()) {
            throw InputError("mask field \"tau\" must be a rational string");
        }
        mask.tau_hint = parse_rational(doc["tau"].get<std::string>());
    }
    if (!doc.contains("matrices") || !doc["matrices"].is_object()) {
        throw InputError("mask document needs an object field \"matrices\"");
    }
    for (const auto& [key, rows] : doc["matrices"].items()) {
        const int offset = parse_offset(key);
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(mask.d)) {
            throw InputError("matrix at offset " + std::to_string(offset) + " must have " +
                             std::to_string(mask.d) + " rows");
        }
        Matrix m(mask.d, mask.d);
        for (int i = 0; i < mask.d; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(mask.d)) {
                throw InputError("matrix at offset " + std::to_string(offset) + ", row " +
                                 std::to_string(i + 1) + " must have " + std::to_string(mask.d) +
                                 " entries");
            }
            for (int j = 0; j < mask.d; ++j) {
                const auto& cell = row[static_cast<std::size_t>(j)];
                if (!cell.is_string()) {
                    throw InputError("matrix entry at offset " + std::to_string(offset) +
                                     " is not a rational string");
                }
                try {
                    m(i, j) = parse_rational(cell.get<std::string>());
                } catch (const InputError& e) {
                    throw InputError("matrix entry at offset " + std::to_string(offset) + ": " +
                                     e.what());
                }
            }
        }
        mask.matrices.emplace(offset, std::move(m));
    }
    mask.validate();
    return mask;
}

std::string save_mask(const HermiteMask& mask) {
    json doc;
    doc["d"] = mask.d;
    if (!mask.name.empty()) {
        doc["name"] = mask.name;
    }
    if (mask.tau_hint) {
        doc["tau"] = to_string(*mask.tau_hint);
    }
    json mats = json::object();
    for (const auto& [l, m] : mask.matrices) {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) {
                row.push_back(to_string(m(i, j)));
            }
            rows.push_back(std::move(row));
        }
        mats[std::to_string(l)] = std::move(rows);
    }
    doc["matrices"] = std::move(mats);
    return doc.dump(2) + "\n";
}

HermiteMask shift_mask(const HermiteMask& mask, int offset) {
    HermiteMask out;
    out.d = mask.d;
    out.name = mask.name;
    out.tau_hint = mask.tau_hint;
    for (const auto& [l, m] : mask.matrices) {
        out.matrices.emplace(l + offset, m);
    }
    return out;
}

} // namespace hsubdiv
