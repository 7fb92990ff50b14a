#pragma once

#include <cmath>
#include <complex>
#include <fstream>
#include <initializer_list>
#include <type_traits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "analytic_map.hpp"
#include "config.hpp"

namespace besov {

using json = nlohmann::json;

/// Schema violation or invalid symbol; what() starts with the JSON path.
class MapParseError : public std::runtime_error
{
  public:
    MapParseError(const std::string& path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(path)
    {
    }

    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

enum class MapRole
{
    symbol,    // must map the disk into itself
    function,  // any analytic function
};

namespace detail {

inline const json& field(const json& j, const std::string& path, const char* name)
{
    auto it = j.find(name);
    if (it == j.end())
        throw MapParseError(path, std::string("missing field '") + name + "'");
    return *it;
}

inline double real_value(const json& j, const std::string& path)
{
    if (!j.is_number())
        throw MapParseError(path, "expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x))
        throw MapParseError(path, "number must be finite");
    return x;
}

/// [re, im]
inline complex complex_value(const json& j, const std::string& path)
{
    if (!j.is_array() || j.size() != 2)
        throw MapParseError(path, "expected [re, im]");
    return {real_value(j[0], path + "[0]"), real_value(j[1], path + "[1]")};
}

inline std::vector<complex> complex_list(const json& j, const std::string& path)
{
    if (!j.is_array())
        throw MapParseError(path, "expected an array of [re, im] pairs");
    std::vector<complex> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(complex_value(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline AnalyticMap parse_node(const json& j, const std::string& path, bool top)
{
    if (!j.is_object())
        throw MapParseError(path, "expected an object");
    const json& kind_json = field(j, path, "kind");
    if (!kind_json.is_string())
        throw MapParseError(path + ".kind", "expected a string");
    const std::string kind = kind_json.get<std::string>();

    auto allow = [&](std::initializer_list<const char*> fields) {
        std::vector<const char*> all(fields);
        all.push_back("kind");
        if (top)
            all.push_back("role");
        for (const auto& [key, value] : j.items())
        {
            bool known = false;
            for (const char* f : all)
                known = known || key == f;
            if (!known)
                throw MapParseError(path + "." + key, "unknown field");
        }
    };

    // Constructors throw std::invalid_argument / DomainError; tag them with the path.
    auto build = [&](auto&& make) -> AnalyticMap {
        try
        {
            return make();
        }
        catch (const MapParseError&)
        {
            throw;
        }
        catch (const std::exception& e)
        {
            throw MapParseError(path, e.what());
        }
    };

    if (kind == "rotation")
    {
        allow({"theta"});
        const double theta = real_value(field(j, path, "theta"), path + ".theta");
        return AnalyticMap::rotation(theta);
    }
    if (kind == "automorphism")
    {
        allow({"lambda_theta", "a"});
        const double theta = real_value(field(j, path, "lambda_theta"), path + ".lambda_theta");
        const complex a = complex_value(field(j, path, "a"), path + ".a");
        return build([&] { return AnalyticMap::automorphism(std::polar(1.0, theta), a); });
    }
    if (kind == "blaschke")
    {
        allow({"lambda_theta", "zeros"});
        const double theta = real_value(field(j, path, "lambda_theta"), path + ".lambda_theta");
        auto zeros = complex_list(field(j, path, "zeros"), path + ".zeros");
        return build([&] { return AnalyticMap::blaschke(std::polar(1.0, theta), std::move(zeros)); });
    }
    if (kind == "series")
    {
        allow({"coeffs"});
        auto coeffs = complex_list(field(j, path, "coeffs"), path + ".coeffs");
        return build([&] { return AnalyticMap::series(std::move(coeffs)); });
    }
    if (kind == "compose")
    {
        allow({"outer", "inner"});
        auto outer = parse_node(field(j, path, "outer"), path + ".outer", false);
        auto inner = parse_node(field(j, path, "inner"), path + ".inner", false);
        return AnalyticMap::compose(std::move(outer), std::move(inner));
    }
    throw MapParseError(path + ".kind", "unknown kind '" + kind + "'");
}

}  // namespace detail

/// Parse a map document. A top-level "role" field overrides default_role;
/// symbols are checked with validate_self_map.
inline AnalyticMap parse_map(const json& j, MapRole default_role = MapRole::symbol)
{
    MapRole role = default_role;
    if (j.is_object())
    {
        if (auto it = j.find("role"); it != j.end())
        {
            if (*it == "symbol")
                role = MapRole::symbol;
            else if (*it == "function")
                role = MapRole::function;
            else
                throw MapParseError("$.role", "expected \"symbol\" or \"function\"");
        }
    }
    AnalyticMap m = detail::parse_node(j, "$", true);
    if (role == MapRole::symbol)
    {
        const auto check = validate_self_map(m, config::self_map_grid_density);
        if (!check.valid)
        {
            std::ostringstream os;
            os.precision(17);
            os << "not a self-map of the disk: |Phi(" << check.witness << ")| = " << check.max_modulus;
            throw MapParseError("$", os.str());
        }
    }
    return m;
}

inline AnalyticMap parse_map_text(const std::string& text, MapRole default_role = MapRole::symbol)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw MapParseError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_map(j, default_role);
}

inline AnalyticMap parse_map_file(const std::string& path, MapRole default_role = MapRole::symbol)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open map file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_map_text(buffer.str(), default_role);
}

namespace detail {

inline json complex_json(complex c) { return json::array({c.real(), c.imag()}); }

inline json complex_list_json(const std::vector<complex>& cs)
{
    json out = json::array();
    for (const auto& c : cs)
        out.push_back(complex_json(c));
    return out;
}

}  // namespace detail

/// Inverse of parse_map (without "role").
inline json to_json(const AnalyticMap& m)
{
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PowerSeries>)
                return {{"kind", "series"},
                        {"coeffs", detail::complex_list_json({v.coefficients().begin(), v.coefficients().end()})}};
            else if constexpr (std::is_same_v<T, DiskAutomorphism>)
            {
                if (v.is_rotation())
                    return {{"kind", "rotation"}, {"theta", std::arg(-v.lambda)}};
                return {{"kind", "automorphism"}, {"lambda_theta", std::arg(v.lambda)}, {"a", detail::complex_json(v.a)}};
            }
            else if constexpr (std::is_same_v<T, BlaschkeProduct>)
                return {{"kind", "blaschke"},
                        {"lambda_theta", std::arg(v.lambda)},
                        {"zeros", detail::complex_list_json(v.zeros)}};
            else
                return {{"kind", "compose"}, {"outer", to_json(*v.outer)}, {"inner", to_json(*v.inner)}};
        },
        m.variant());
}

}  // namespace besov
