#include "bracekit/skew_brace.hpp"

#include "bracekit/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace bracekit {

FiniteSkewBrace FiniteSkewBrace::verify_brace(FiniteGroup dot, FiniteGroup circ) {
    if (dot.order() != circ.order())
        throw Error("IdentityMismatch", "laws live on sets of different size");
    const std::size_t n = dot.order();
    for (Elem a = 0; a < n; ++a) {
        const Elem ainv = dot.inv(a);
        for (Elem b = 0; b < n; ++b) {
            const Elem ab = circ.mul(a, b);
            for (Elem c = 0; c < n; ++c) {
                const Elem lhs = circ.mul(a, dot.mul(b, c));
                const Elem rhs = dot.mul(dot.mul(ab, ainv), circ.mul(a, c));
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "a o (b . c) != (a o b) . a^-1 . (a o c) at (a,b,c)=(" << a << "," << b
                       << "," << c << ")";
                    throw Error("BraceIdentityViolation", os.str());
                }
            }
        }
    }
    return FiniteSkewBrace(std::move(dot), std::move(circ));
}

std::vector<Elem> FiniteSkewBrace::lambda_map(Elem a) const {
    std::vector<Elem> m(order());
    for (std::size_t x = 0; x < order(); ++x) m[x] = lambda(a, static_cast<Elem>(x));
    return m;
}

std::string to_string(TrivialityClass c) {
    switch (c) {
        case TrivialityClass::trivial: return "trivial";
        case TrivialityClass::almost_trivial: return "almost_trivial";
        default: return "neither";
    }
}

TrivialityClass classify_triviality(const FiniteSkewBrace& b) {
    const std::size_t n = b.order();
    bool same = true, opposite = true;
    for (Elem x = 0; x < n && (same || opposite); ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem c = b.circ().mul(x, y);
            if (c != b.dot().mul(x, y)) same = false;
            if (c != b.dot().mul(y, x)) opposite = false;
            if (!same && !opposite) break;
        }
    if (same) return TrivialityClass::trivial;
    if (opposite) return TrivialityClass::almost_trivial;
    return TrivialityClass::neither;
}

IdealCheck is_ideal(const FiniteSkewBrace& b, const ElemSet& s) {
    const std::size_t n = b.order();
    std::vector<char> in(n, 0);
    for (Elem e : s) {
        if (e >= n) throw Error("BadElement", "element index out of range");
        in[e] = 1;
    }
    if (!is_subgroup(b.dot(), s)) return {false, "not_subgroup"};
    for (Elem g = 0; g < n; ++g)
        for (Elem e : s) {
            if (!in[b.dot().conj(g, e)])
                return {false, "not_normal_dot at g=" + std::to_string(g) + ", s=" + std::to_string(e)};
        }
    for (Elem g = 0; g < n; ++g)
        for (Elem e : s) {
            if (!in[b.circ().conj(g, e)])
                return {false, "not_normal_circ at g=" + std::to_string(g) + ", s=" + std::to_string(e)};
        }
    for (Elem a = 0; a < n; ++a)
        for (Elem e : s) {
            if (!in[b.lambda(a, e)])
                return {false, "not_lambda_stable at a=" + std::to_string(a) + ", s=" + std::to_string(e)};
        }
    return {true, ""};
}

std::vector<ElemSet> all_ideals(const FiniteSkewBrace& b, std::size_t order_bound) {
    if (b.order() > order_bound)
        throw Error("OrderBoundExceeded", "order " + std::to_string(b.order()) + " exceeds bound " +
                                              std::to_string(order_bound));
    std::vector<ElemSet> out;
    for (const ElemSet& s : all_subgroups(b.dot()))
        if (is_ideal(b, s).ok) out.push_back(s);
    return out;  // all_subgroups is already sorted by (size, elements)
}

FiniteSkewBrace quotient(const FiniteSkewBrace& b, const ElemSet& ideal) {
    IdealCheck check = is_ideal(b, ideal);
    if (!check.ok) throw Error("NotAnIdeal", check.failure);
    const std::size_t n = b.order();
    // dot-cosets; for an ideal these coincide with circ-cosets
    std::vector<int> class_of(n, -1);
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x) {
        if (class_of[x] >= 0) continue;
        const int cls = static_cast<int>(reps.size());
        reps.push_back(x);
        for (Elem i : ideal) class_of[b.dot().mul(x, i)] = cls;
    }
    const std::size_t m = reps.size();
    std::vector<std::vector<Elem>> dot_rows(m, std::vector<Elem>(m)), circ_rows(m, std::vector<Elem>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            dot_rows[i][j] = static_cast<Elem>(class_of[b.dot().mul(reps[i], reps[j])]);
            circ_rows[i][j] = static_cast<Elem>(class_of[b.circ().mul(reps[i], reps[j])]);
        }
    return FiniteSkewBrace::verify_brace(FiniteGroup::check_group(dot_rows),
                                         FiniteGroup::check_group(circ_rows));
}

ElemSet smallest_ideal_containing(const FiniteSkewBrace& b, ElemSet generators) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    ElemSet s = std::move(generators);
    const std::size_t n = b.order();
    while (true) {
        const std::size_t before = s.size();
        s = generated_subgroup(b.dot(), s);
        s = normal_closure(b.dot(), s);
        s = normal_closure(b.circ(), s);
        std::vector<char> in(n, 0);
        for (Elem e : s) in[e] = 1;
        ElemSet extra;
        for (Elem a = 0; a < n; ++a)
            for (Elem e : s) {
                const Elem img = b.lambda(a, e);
                if (!in[img]) {
                    in[img] = 1;
                    extra.push_back(img);
                }
            }
        s.insert(s.end(), extra.begin(), extra.end());
        std::sort(s.begin(), s.end());
        if (s.size() == before) return s;
    }
}

BraceDerivedSeries brace_derived_series(const FiniteSkewBrace& b) {
    BraceDerivedSeries out;
    ElemSet current(b.order());
    std::iota(current.begin(), current.end(), 0);
    out.chain.push_back(current);
    while (true) {
        ElemSet gens;
        for (Elem x : current)
            for (Elem y : current) {
                gens.push_back(
                    b.dot().mul(b.dot().mul(x, y), b.dot().mul(b.dot().inv(x), b.dot().inv(y))));
                gens.push_back(
                    b.circ().mul(b.circ().mul(x, y), b.circ().mul(b.circ().inv(x), b.circ().inv(y))));
                gens.push_back(b.star(x, y));
            }
        ElemSet next = smallest_ideal_containing(b, std::move(gens));
        out.chain.push_back(next);
        if (next == current || next.size() == 1) break;
        current = std::move(next);
    }
    out.solvable = out.chain.back().size() == 1;
    return out;
}

CriterionChecks criterion_checks(const FiniteSkewBrace& b, const ElemSet& h) {
    const std::size_t n = b.order();
    if (!is_subgroup(b.dot(), h)) throw Error("NotCharacteristic", "set is not a subgroup of dot");
    if (!is_characteristic(b.dot(), h, automorphisms(b.dot())))
        throw Error("NotCharacteristic", "subgroup is not automorphism-stable");

    std::vector<char> in(n, 0);
    for (Elem e : h) in[e] = 1;

    CriterionChecks out;
    // h * G contained in h
    out.char_star = true;
    for (Elem x : h) {
        for (Elem g = 0; g < n && out.char_star; ++g)
            if (!in[b.star(x, g)]) out.char_star = false;
        if (!out.char_star) break;
    }
    // induced action on dot/h: every element of h must act trivially on cosets
    std::vector<int> class_of(n, -1);
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x) {
        if (class_of[x] >= 0) continue;
        const int cls = static_cast<int>(reps.size());
        reps.push_back(x);
        for (Elem i : h) class_of[b.dot().mul(x, i)] = cls;
    }
    out.fund_lemma_lhs = true;
    for (Elem x : h) {
        for (Elem g = 0; g < n && out.fund_lemma_lhs; ++g)
            if (class_of[b.lambda(x, g)] != class_of[g]) out.fund_lemma_lhs = false;
        if (!out.fund_lemma_lhs) break;
    }
    out.fund_lemma_rhs = is_ideal(b, h).ok;
    return out;
}

std::vector<HolomorphElement> regular_embedding(const FiniteSkewBrace& b) {
    const auto auts = automorphisms(b.dot());
    std::map<std::vector<Elem>, std::uint32_t> index_of;
    for (std::size_t i = 0; i < auts.size(); ++i) index_of[auts[i].map] = static_cast<std::uint32_t>(i);
    std::vector<HolomorphElement> out;
    out.reserve(b.order());
    for (Elem a = 0; a < b.order(); ++a) {
        auto it = index_of.find(b.lambda_map(a));
        if (it == index_of.end())
            throw Error("EngineBug", "lambda_" + std::to_string(a) + " is not an automorphism of dot");
        out.push_back(HolomorphElement{a, it->second});
    }
    return out;
}

FiniteSkewBrace brace_from_embedding(const FiniteGroup& dot,
                                     const std::vector<HolomorphElement>& embedding,
                                     const std::vector<GroupHom>& auts) {
    const std::size_t n = dot.order();
    if (embedding.size() != n)
        throw Error("BadElement", "embedding must have one element per translation");
    std::vector<const GroupHom*> phi(n, nullptr);
    for (const auto& he : embedding) {
        if (he.translation >= n || he.automorphism >= auts.size() || phi[he.translation])
            throw Error("BadElement", "embedding is not one-per-translation");
        phi[he.translation] = &auts[he.automorphism];
    }
    std::vector<std::vector<Elem>> circ_rows(n, std::vector<Elem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (Elem x = 0; x < n; ++x)
            circ_rows[a][x] = dot.mul(static_cast<Elem>(a), (*phi[a])(x));
    return FiniteSkewBrace::verify_brace(dot, FiniteGroup::check_group(circ_rows));
}

namespace {

// Generator-image backtracking for a bijection that is a homomorphism for both
// laws at once; candidates screened by (dot order, circ order) pairs and
// partial maps closed under both products.
struct BraceIsoSearch {
    const FiniteSkewBrace& a;
    const FiniteSkewBrace& b;
    bool found = false;

    void run() {
        if (a.order() != b.order()) return;
        ElemSet gens = greedy_generators(a.dot());
        std::vector<int> img(a.order(), -1);
        img[0] = 0;
        std::vector<Elem> dom{0};
        std::vector<char> used(b.order(), 0);
        used[0] = 1;
        extend(gens, 0, img, dom, used);
    }

    void extend(const ElemSet& gens, std::size_t k, std::vector<int>& img, std::vector<Elem>& dom,
                std::vector<char>& used) {
        if (found) return;
        if (k == gens.size()) {
            if (dom.size() == a.order()) found = true;
            return;
        }
        const Elem gen = gens[k];
        if (img[gen] != -1) {
            // closure under both laws can overrun later generators; their
            // images are already forced
            extend(gens, k + 1, img, dom, used);
            return;
        }
        const std::size_t od = a.dot().element_order(gen), oc = a.circ().element_order(gen);
        for (Elem c = 0; c < b.order(); ++c) {
            if (used[c]) continue;
            if (b.dot().element_order(c) != od || b.circ().element_order(c) != oc) continue;
            std::vector<int> img2 = img;
            std::vector<Elem> dom2 = dom;
            std::vector<char> used2 = used;
            img2[gen] = c;
            used2[c] = 1;
            dom2.push_back(gen);
            // worklist closure: pairs among the old elements are closed
            // already, so process each new element against everything
            bool ok = true;
            std::size_t next = dom2.size() - 1;
            while (ok && next < dom2.size()) {
                const Elem x = dom2[next++];
                for (std::size_t j = 0; j < dom2.size() && ok; ++j) {
                    const Elem y = dom2[j];
                    for (int law = 0; law < 4 && ok; ++law) {
                        const FiniteGroup& ga = (law & 1) ? a.circ() : a.dot();
                        const FiniteGroup& gb = (law & 1) ? b.circ() : b.dot();
                        const Elem p = (law & 2) ? ga.mul(y, x) : ga.mul(x, y);
                        const Elem q = (law & 2) ? gb.mul(static_cast<Elem>(img2[y]),
                                                          static_cast<Elem>(img2[x]))
                                                 : gb.mul(static_cast<Elem>(img2[x]),
                                                          static_cast<Elem>(img2[y]));
                        if (img2[p] == -1) {
                            if (used2[q]) {
                                ok = false;
                                break;
                            }
                            img2[p] = q;
                            used2[q] = 1;
                            dom2.push_back(p);
                        } else if (img2[p] != q) {
                            ok = false;
                        }
                    }
                }
            }
            if (ok) extend(gens, k + 1, img2, dom2, used2);
            if (found) return;
        }
    }
};

}  // namespace

bool braces_isomorphic(const FiniteSkewBrace& a, const FiniteSkewBrace& b) {
    BraceIsoSearch search{a, b};
    search.run();
    return search.found;
}

}  // namespace bracekit
