#include "orbchi/species.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "orbchi/moments.hpp"

namespace orbchi {

Species::Species(std::string name, Coefficient q, std::optional<int> max_n)
    : name_(std::move(name)), q_(std::move(q)), max_n_(max_n)
{
}

Rational Species::q(int n) const
{
    if (n < 3) {
        return Rational{};
    }
    if (!covers(n)) {
        throw std::out_of_range("species '" + name_ + "' defines Q_n only up to n = " + std::to_string(*max_n_)
                                + ", Q_" + std::to_string(n) + " requested");
    }
    return q_(n);
}

Rational Species::count(int n) const
{
    return q(n) * Rational(factorial(static_cast<unsigned>(std::max(n, 0))));
}

const std::vector<std::string>& builtin_species_names()
{
    static const std::vector<std::string> names{"commutative", "associative", "lie", "chord"};
    return names;
}

Species builtin_species(std::string_view name)
{
    if (name == "commutative") {
        return Species("commutative", [](int n) { return Rational(Integer(1), factorial(static_cast<unsigned>(n))); });
    }
    if (name == "associative") {
        return Species("associative", [](int n) { return rational_from(1, n); });
    }
    if (name == "lie") {
        return Species("lie", [](int n) { return rational_from(1, static_cast<long>(n) * (n - 1)); });
    }
    if (name == "chord") {
        return Species("chord", [](int n) {
            return Rational(gaussian_moment(n), factorial(static_cast<unsigned>(n)));
        });
    }
    std::string valid;
    for (const auto& n : builtin_species_names()) {
        valid += (valid.empty() ? "" : ", ") + n;
    }
    throw std::invalid_argument("unknown species '" + std::string(name) + "' (valid: " + valid + ")");
}

namespace {

int parse_valence(const std::string& key, std::string_view origin)
{
    if (key.empty() || key.size() > 6 || key.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument(std::string(origin) + ": malformed Q key \"" + key + "\"");
    }
    return std::stoi(key);
}

Rational parse_count(const nlohmann::json& value, const std::string& key, std::string_view origin)
{
    try {
        if (value.is_number_integer()) {
            return Rational(value.get<long>());
        }
        if (value.is_string()) {
            return Rational::parse(value.get<std::string>());
        }
    } catch (const std::exception&) {
        // fall through to the uniform message
    }
    throw std::invalid_argument(std::string(origin) + ": malformed entry Q_" + key + " = " + value.dump()
                                + " (expected an integer or a \"p/q\" string)");
}

} // namespace

Species species_from_json(std::string_view document, std::string_view origin)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string(origin) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument(std::string(origin) + ": species document must be an object");
    }
    if (!doc.contains("name") || !doc["name"].is_string()) {
        throw std::invalid_argument(std::string(origin) + ": missing string field \"name\"");
    }
    if (!doc.contains("Q") || !doc["Q"].is_object()) {
        throw std::invalid_argument(std::string(origin) + ": missing object field \"Q\"");
    }

    std::map<int, Rational> counts;
    for (const auto& [key, value] : doc["Q"].items()) {
        const int n = parse_valence(key, origin);
        Rational c = parse_count(value, key, origin);
        if (n < 3) {
            if (!c.is_zero()) {
                throw std::invalid_argument(std::string(origin) + ": Q_" + key + " must be zero (valence < 3)");
            }
            continue;
        }
        counts[n] = std::move(c);
    }
    if (counts.empty()) {
        throw std::invalid_argument(std::string(origin) + ": \"Q\" has no entries with n >= 3");
    }
    const int max_n = counts.rbegin()->first;
    for (int n = 3; n <= max_n; ++n) {
        if (!counts.contains(n)) {
            throw std::invalid_argument(std::string(origin) + ": missing Q_" + std::to_string(n));
        }
    }

    std::vector<Rational> q(static_cast<std::size_t>(max_n) + 1);
    for (const auto& [n, c] : counts) {
        q[static_cast<std::size_t>(n)] = c / Rational(factorial(static_cast<unsigned>(n)));
    }
    return Species(doc["name"].get<std::string>(),
                   [q = std::move(q)](int n) { return q.at(static_cast<std::size_t>(n)); }, max_n);
}

Species species_from_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open species file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return species_from_json(buf.str(), path.string());
}

int required_max_n(int loops)
{
    if (loops < 2) {
        throw std::invalid_argument("loop number must be >= 2");
    }
    return 2 * loops;
}

} // namespace orbchi
