// Walk-through of the library on small instances in BS(1,2).

#include <iostream>

#include "bsn/bsn.hpp"

using namespace bsn;

namespace {

void show(const char* label, const TcpResult& r) {
    std::cout << label << ": " << (r.decision ? "YES, witness = " + to_string(*r.witness) : "NO") << '\n';
    for (const auto& line : r.trace)
        std::cout << "    " << line << '\n';
}

} // namespace

int main() {
    const GroupContext ctx(2);
    const auto el = [&](const char* w) { return parse_element(w, ctx); };

    std::cout << "normal forms\n";
    std::cout << "  t a           = " << el("t a") << '\n';
    std::cout << "  t^-1 a t      = " << el("t^-1 a t") << '\n';
    std::cout << "  (a t)^3       = " << pow(el("a t"), 3) << '\n';
    std::cout << "  (a t)^-1      = " << inv(el("a t")) << '\n';
    std::cout << "  matrix(a t)   = " << to_matrix(el("a t")).str() << "\n\n";

    const auto psi = parse_endo("I:alpha=3,beta=1", ctx);
    const auto kill = parse_endo("II:beta=1,c=2", ctx);
    std::cout << "endomorphisms\n";
    std::cout << "  psi           = " << to_string(psi) << '\n';
    std::cout << "  a t psi       = " << apply(psi, el("a t")) << '\n';
    std::cout << "  psi then II   = " << to_string(compose(psi, kill)) << '\n';
    std::cout << "  inner(t)      = " << to_string(inner(el("t"))) << "\n\n";

    std::cout << "twisted conjugacy\n";
    show("  a ~ a^2 (id)", decide_conj(el("a"), el("a^2")));
    show("  a ~ a^3 (id)", decide_conj(el("a"), el("a^3")));
    show("  t ~ a t (id)", decide_conj(el("t"), el("a t")));
    show("  a ~ a^5 (psi)", decide_tcp({el("a"), el("a^5"), psi}));
    show("  a t ~ t^2 (II)", decide_tcp({el("a t"), el("t^2"), kill}));
    std::cout << '\n';

    std::cout << "diophantine core A n^x + B y = C n^z\n";
    for (const auto& d : {DiophInstance{3, 0, 5, 2}, DiophInstance{3, 7, 5, 2}, DiophInstance{4, 8, 0, 2}}) {
        const auto s = solve(d);
        std::cout << "  A=" << d.A << " B=" << d.B << " C=" << d.C << ": ";
        if (s)
            std::cout << *s << '\n';
        else
            std::cout << "no solution\n";
    }
    std::cout << '\n';

    std::cout << "fixed points of a -> u a u^-1, t -> v\n";
    const auto u = el("a^-1");
    const auto v = el("a t");
    const auto fc = fix_in_class_of_a(u, v, NRational::integer(2, 2));
    std::cout << "  psi = " << to_string(build_psi(u, v)) << '\n';
    show("  class of a, alpha = 2", fc.tcp);
    if (fc.fixed)
        std::cout << "  fixed element " << *fc.fixed << '\n';
    return 0;
}
