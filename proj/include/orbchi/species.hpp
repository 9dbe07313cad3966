#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbchi/rational.hpp"

namespace orbchi {

/// A vertex species Q: Q_n structures on n labelled half-edges.
///
/// Only n >= 3 carries information; Q_0 = Q_1 = Q_2 = 0 always. The species
/// stores the EGF coefficients q_n = Q_n / n!. Built-in species are defined
/// for every n, file-backed ones up to max_n().
class Species {
public:
    using Coefficient = std::function<Rational(int)>;

    Species(std::string name, Coefficient q, std::optional<int> max_n = std::nullopt);

    const std::string& name() const { return name_; }

    /// Largest n with a defined coefficient; nullopt means unbounded.
    std::optional<int> max_n() const { return max_n_; }
    bool covers(int n) const { return !max_n_ || n <= *max_n_; }

    /// EGF coefficient q_n. Zero for n < 3; throws std::out_of_range past max_n().
    Rational q(int n) const;

    /// Structure count Q_n = q_n * n!.
    Rational count(int n) const;

private:
    std::string name_;
    Coefficient q_;
    std::optional<int> max_n_;
};

/// Names accepted by builtin_species.
const std::vector<std::string>& builtin_species_names();

/// commutative (Q_n = 1), associative (Q_n = (n-1)!), lie (Q_n = (n-2)!)
/// or chord (Q_n = (n-1)!! for even n, 0 for odd n).
Species builtin_species(std::string_view name);

/// Loads a species document of the form
///   {"name": "...", "Q": {"3": 1, "4": "3/2", ...}}
/// The keys must cover 3..max without gaps.
Species species_from_file(const std::filesystem::path& path);

/// Same as species_from_file, reading the document from a string.
Species species_from_json(std::string_view document, std::string_view origin = "<string>");

/// Largest vertex valence that can occur in a graph with at most N loops: 2N.
int required_max_n(int loops);

} // namespace orbchi
