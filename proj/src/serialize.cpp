#include "mahon/serialize.hpp"

#include <stdexcept>

namespace mahon {

Json to_json(const Cyclo& v) {
    Json coeffs = Json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"t", v.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclo cyclo_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        return Cyclo::from_rational(1, parse_rational(j.get<std::string>()));
    }
    if (!j.is_object() || !j.contains("t") || !j.contains("coeffs"))
        throw std::invalid_argument("cyclonum: expected {\"t\", \"coeffs\"} or a rational string");
    const unsigned t = j.at("t").get<unsigned>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != euler_phi(t))
        throw std::invalid_argument("cyclonum: coeffs must have euler_phi(t) entries");
    Cyclo v = Cyclo::zero(t);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational c = parse_rational(coeffs[i].get<std::string>());
        if (sgn(c) != 0)
            v += root_power(t, static_cast<long long>(i)) * Cyclo::from_rational(t, c);
    }
    return v;
}

namespace {
template <class Scalar>
Json series_json(const QSeries<Scalar>& s) {
    Json coeffs = Json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if constexpr (std::is_same_v<Scalar, Rational>)
            coeffs.push_back(to_string(s[n]));
        else
            coeffs.push_back(to_json(s[n]));
    }
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}
}  // namespace

Json to_json(const QSeries<Rational>& s) { return series_json(s); }
Json to_json(const QSeries<Cyclo>& s) { return series_json(s); }

ExponentVector parse_exponent_vector(const std::string& csv) {
    std::vector<unsigned> entries;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        const std::string item = csv.substr(pos, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("exponent vector: bad entry '" + item + "'");
        entries.push_back(static_cast<unsigned>(std::stoul(item)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ExponentVector(std::move(entries));
}

std::vector<LinearCombination> basis_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("basis: expected a non-empty JSON list of atoms");

    struct RawAtom {
        unsigned d_power, twist;
        ExponentVector vec;
        Cyclo coeff;
    };
    std::vector<RawAtom> atoms;
    unsigned conductor = 1;
    for (const auto& entry : j) {
        RawAtom atom{
            entry.value("j", 0u),
            entry.value("s", 0u),
            ExponentVector(entry.at("vector").get<std::vector<unsigned>>()),
            cyclo_from_json(entry.at("c")),
        };
        conductor = std::max(conductor, atom.coeff.conductor());
        atoms.push_back(std::move(atom));
    }
    for (const auto& atom : atoms) {
        if (atom.coeff.conductor() != conductor && atom.coeff.conductor() != 1)
            throw std::invalid_argument("basis: mixed conductors");
        if (atom.twist >= conductor)
            throw std::invalid_argument("basis: twist index needs a larger conductor");
    }

    std::vector<LinearCombination> out;
    for (auto& atom : atoms) {
        Cyclo c = atom.coeff;
        if (c.conductor() != conductor)
            c = Cyclo::from_rational(conductor, c.rational_part());
        LinearCombination comb;
        comb.conductor = conductor;
        comb.terms.push_back(CombinationTerm{atom.d_power, atom.vec, atom.twist, c});
        out.push_back(std::move(comb));
    }
    return out;
}

}  // namespace mahon
