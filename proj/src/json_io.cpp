#include "capelli/json_io.hpp"

namespace capelli {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational(j.get<std::string>());
}

GroupAlgebraElement<Rational> group_algebra_from_json(const Json& j, int degree) {
    GroupAlgebraElement<Rational> x(degree);
    for (const auto& term : j) {
        std::vector<int> images = term.at("perm").get<std::vector<int>>();
        x.add_term(Permutation::from_images(std::move(images)),
                   rational_from_json(term.at("coeff")));
    }
    return x;
}

}  // namespace capelli
