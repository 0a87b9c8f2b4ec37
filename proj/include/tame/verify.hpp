#pragma once

// End-to-end check of the (10, 23, 25) example: multidegree, the bracket
// [f1, f3] and its degree, the dependence facts behind the degree bound
// counterexample, the Jacobian, and recovery of f2's defining relation.

#include <tame/autos.hpp>
#include <tame/poisson.hpp>
#include <tame/reduction.hpp>

#include <string>
#include <vector>

namespace tame {

struct ExampleCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ExampleReport {
    std::vector<ExampleCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

namespace detail {

inline ExampleCheck poly_check(std::string name, const Polynomial& got, const Polynomial& want) {
    const bool ok = got == want;
    return {std::move(name), ok,
            ok ? print_polynomial(got) : "got " + print_polynomial(got) + ", expected " + print_polynomial(want)};
}

} // namespace detail

inline ExampleReport verify_example(const PolyMap& F) {
    ExampleReport report;
    auto add = [&](ExampleCheck c) { report.checks.push_back(std::move(c)); };
    if (F.arity() != 3) {
        add({"map_arity", false, "expected 3 components, got " + std::to_string(F.arity())});
        return report;
    }
    const Polynomial& f1 = F[0];
    const Polynomial& f3 = F[2];

    const MDeg md = mdeg(F);
    const MDeg want_md{10, 23, 25};
    add({"mdeg", md == want_md, "mdeg = " + print_mdeg(md) + (md == want_md ? "" : ", expected (10,23,25)")});

    const BracketValue b = poisson_bracket(f1, f3);
    add(detail::poly_check("bracket_xy", b.coefficient(0, 1),
                           parse_polynomial("-30*x^2*y^4 - 54*x^3*y^2 - 18*x^4 - 6*y^3*z - 12*x*y*z + 1")));
    add(detail::poly_check("bracket_xz", b.coefficient(0, 2),
                           -parse_polynomial("6*y^4 + 12*x*y^2 + 6*x^2")));
    add(detail::poly_check("bracket_yz", b.coefficient(1, 2),
                           parse_polynomial("-10*y^5 - 18*x*y^3 - 6*x^2*y + 2*z")));

    const Degree bd = bracket_degree(b);
    const Degree min_deg = std::min(f1.degree(), f3.degree());
    const bool bd_ok = bd == Degree(8) && bd < min_deg && min_deg == Degree(10);
    add({"bracket_degree", bd_ok, "deg [f1,f3] = " + bd.str() + ", min(deg f1, deg f3) = " + min_deg.str()});

    const bool indep = !b.is_zero();
    add({"f1_f3_independent", indep, indep ? "[f1,f3] != 0" : "[f1,f3] = 0"});

    bool lead_dep = false;
    std::string lead_detail = "zero component";
    if (!f1.is_zero() && !f3.is_zero()) {
        const BracketValue lb = poisson_bracket(leading_form(f1), leading_form(f3));
        lead_dep = lb.is_zero();
        lead_detail = lead_dep ? "[lf(f1),lf(f3)] = 0" : "[lf(f1),lf(f3)] = " + print_bracket(lb, default_variables(3));
    }
    add({"leading_forms_dependent", lead_dep, lead_detail});

    const Polynomial jac = jacobian_det(F);
    const bool jac_ok = !jac.is_zero() && jac.is_constant();
    add({"jacobian_constant", jac_ok, "det J = " + print_polynomial(jac)});

    ExampleCheck red{"reduction_recovery", false, "no reduction found"};
    try {
        if (auto r = find_elementary_reduction({F, 1, 50})) {
            const Polynomial want_g = parse_polynomial("256/25*u^5 + v^2", {"u", "v"});
            const Polynomial want_res = example::g();
            red.passed = r->first_arg == 0 && r->second_arg == 2 && r->g == want_g &&
                         r->residual == want_res && r->residual_degree == Degree(5);
            red.detail = "g(u,v) = " + print_polynomial(r->g, {"u", "v"}) + ", residual = " +
                         print_polynomial(r->residual) + ", degree " + r->residual_degree.str();
        }
    } catch (const DomainError& e) {
        red.detail = e.what();
    }
    add(red);

    return report;
}

inline ExampleReport verify_example() { return verify_example(build_example_map()); }

} // namespace tame
