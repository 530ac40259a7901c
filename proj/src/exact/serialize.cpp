#include "scc/exact/serialize.hpp"

#include "scc/exact/errors.hpp"

namespace scc {

namespace {

nlohmann::json coeff_list(const Cyclotomic& x) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& q : x.coeffs()) c.push_back({q.get_num().get_str(), q.get_den().get_str()});
    return c;
}

Cyclotomic from_list(long n, const nlohmann::json& c) {
    std::vector<mpq_class> v;
    for (const auto& e : c) {
        mpq_class q(mpz_class(e.at(0).get<std::string>()), mpz_class(e.at(1).get<std::string>()));
        q.canonicalize();
        v.push_back(q);
    }
    return Cyclotomic::from_coeffs(n, v);
}

}  // namespace

nlohmann::json to_json(const Cyclotomic& x) { return {{"order", x.order()}, {"coeffs", coeff_list(x)}}; }

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) { return from_list(j.at("order").get<long>(), j.at("coeffs")); }

nlohmann::json to_json(const ExactMatrix& m) {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& x : m.entries()) e.push_back(coeff_list(x));
    return {{"dim", m.dim()}, {"order", m.order()}, {"entries", e}};
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
    int d = j.at("dim").get<int>();
    long n = j.at("order").get<long>();
    const auto& e = j.at("entries");
    if (e.size() != static_cast<size_t>(d) * d) throw PreconditionError("matrix_from_json: entry count mismatch");
    ExactMatrix m(d, n);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) m(i, k) = from_list(n, e[static_cast<size_t>(i) * d + k]);
    return m;
}

nlohmann::json to_json(const IntPolynomial& p) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : p.coeffs()) c.push_back(x.get_str());
    return c;
}

IntPolynomial intpoly_from_json(const nlohmann::json& j) {
    std::vector<mpz_class> v;
    for (const auto& x : j) v.emplace_back(x.get<std::string>());
    return IntPolynomial(std::move(v));
}

}  // namespace scc
