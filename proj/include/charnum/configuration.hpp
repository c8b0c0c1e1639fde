#pragma once

// Shared enumeration engine for characteristic numbers of boundary divisors.
//
// A boundary stable map is described by its image components (lines or
// conics, each covered with some degree and some branch points) and by the
// nodes joining them. A configuration assigns every point condition to a
// component, and every line condition to one mechanism:
//   pair     two lines meeting on the image at a common branch point
//   single   one line through a branch point that moves with the image
//   tangent  one line tangent to an image conic
//   node     one line through the image of a node
// The engine solves for the image curves, multiplies by the preimage and
// cover factors, and sums over labeled configurations.

#include "charnum/conics.hpp"
#include "charnum/exact.hpp"
#include "charnum/linform.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace charnum::config {

enum class ImageKind { Line, Conic };

inline int image_degree(ImageKind k) { return k == ImageKind::Line ? 1 : 2; }
inline int family_dimension(ImageKind k) { return k == ImageKind::Line ? 2 : 5; }

/// Divisor class restricted to a one-parameter family of covers of a line:
/// D = branch * (two branch points collide) + marked * (branch point meets the marked point).
struct ModuliClass {
    LinForm branch;
    LinForm marked;
};

struct ComponentSpec {
    std::string name;
    ImageKind image = ImageKind::Line;
    int cover_degree = 1;
    int branch_points = 0;  // includes branch points forced at ramified nodes
    std::optional<ModuliClass> moduli;  // set when the cover carries a codimension-one moduli condition
    Rational covers = 1;                // stack-weighted number of covers with given branch points
};

enum class Contact { Transverse, Tangent };

struct NodeSpec {
    std::string name;
    std::vector<int> components;  // 2 entries, or 3 for a triple point
    Contact contact = Contact::Transverse;
    int line_multiplicity = 2;     // weight of a line condition satisfied at the node image
    std::vector<int> ramified_on;  // components whose cover branches at the node
    int attachments = 1;           // choices of preimage points to glue
};

/// A nontrivial automorphism of the dual graph as permutations of components and nodes.
struct Symmetry {
    std::vector<int> components;
    std::vector<int> nodes;
};

struct DivisorSpec {
    std::string name;
    std::vector<ComponentSpec> components;
    std::vector<NodeSpec> nodes;
    int total_conditions = 13;
    std::vector<Symmetry> symmetries;
    /// Value used for a moduli cover whose image line turns about the known
    /// marked point, in place of the value implied by the moduli class.
    std::optional<LinForm> centered_pencil_value;
    conics::ConicTable conic_table = conics::standard_table();

    int symmetry_order() const { return 1 + static_cast<int>(symmetries.size()); }

    int free_branch_points(int c) const {
        int ram = 0;
        for (const auto& n : nodes)
            ram += static_cast<int>(std::count(n.ramified_on.begin(), n.ramified_on.end(), c));
        return components[c].branch_points - ram;
    }
};

struct Configuration {
    std::vector<int> points;
    std::vector<int> pairs;
    std::vector<int> singles;
    std::vector<int> tangents;
    std::vector<int> node_lines;

    int line_conditions() const {
        int n = 0;
        for (std::size_t i = 0; i < points.size(); ++i) n += 2 * pairs[i] + singles[i] + tangents[i];
        for (int k : node_lines) n += k;
        return n;
    }

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// How a configuration's image curves were determined.
enum class Resolution {
    Sequential,             // components fixed one at a time
    JointTwoNodes,          // conic and line move together, both nodes on given lines
    JointTangentNode,       // conic and line move together, tangency point on a given line
    ModuliFixed,            // fixed image, one branch point free
    ModuliMarkedMoving,     // fixed image, marked point moves along it
    ModuliPencil,           // image line in a pencil
    ModuliPencilOnLine,     // image line in a pencil, marked point on a fixed line
    ModuliCenteredPencil,   // image line turning about the known marked point
};

inline std::string to_string(Resolution r) {
    switch (r) {
        case Resolution::Sequential: return "sequential";
        case Resolution::JointTwoNodes: return "joint: both nodes on given lines";
        case Resolution::JointTangentNode: return "joint: tangency point on a given line";
        case Resolution::ModuliFixed: return "moduli: fixed image, one free branch point";
        case Resolution::ModuliMarkedMoving: return "moduli: fixed image, marked point moving";
        case Resolution::ModuliPencil: return "moduli: image in a pencil";
        case Resolution::ModuliPencilOnLine: return "moduli: image in a pencil, marked point on a fixed line";
        case Resolution::ModuliCenteredPencil: return "moduli: image turning about the marked point";
    }
    return "?";
}

struct Term {
    Configuration config;
    Resolution resolution = Resolution::Sequential;
    bool data_backed = false;  // uses DivisorSpec::centered_pencil_value
    LinForm geometric;         // number of solutions for the image data
    Integer point_partitions;
    Integer line_partitions;
    Rational multiplicity;     // preimage, tangency, node, cover and gluing factors
    LinForm contribution;      // geometric * partitions * multiplicity / |symmetry|
};

struct Column {
    LinForm total;
    std::vector<Term> terms;
};

/// Joint counts when a conic and a line in one-parameter families must both
/// satisfy node conditions. npt is the number of conics in the conic family
/// through one more point, ntan the number tangent to one more line.
inline Integer joint_two_nodes(const Integer& npt) { return 3 * npt; }
inline Integer joint_tangent_node(const Integer& npt, const Integer& ntan) { return npt + ntan; }

namespace detail {

struct ComponentState {
    int pts = 0;
    int tan = 0;
    int dirs = 0;       // known point with a prescribed tangent direction
    int tanfixed = 0;   // tangency to an already fixed curve
    bool fixed = false;
    int conditions() const { return pts + tan + dirs + tanfixed; }
};

struct Solved {
    Integer mult = 1;
    std::vector<ComponentState> st;
    std::vector<bool> known;
};

inline Integer count_fixed(const conics::ConicTable& table, const ComponentSpec& c, const ComponentState& s) {
    if (c.image == ImageKind::Line) {
        if (s.pts == 2 && s.dirs == 0 && s.tanfixed == 0) return 1;
        if (s.pts == 1 && s.dirs == 1) return 1;
        if (s.pts == 1 && s.tanfixed == 1) return 2;
        throw std::logic_error("unsupported line conditions on " + c.name);
    }
    if (s.dirs == 0) return table.count(s.pts, s.tan + s.tanfixed);
    if (s.dirs == 1) return table.flag_count(s.pts - 1, s.tan + s.tanfixed);
    throw std::logic_error("unsupported conic conditions on " + c.name);
}

/// Fixes components one at a time and propagates node positions.
/// Returns nullopt when some component is overdetermined.
inline std::optional<Solved> propagate(const DivisorSpec& div, const Configuration& cfg) {
    const auto& comps = div.components;
    const auto& nodes = div.nodes;
    Solved out;
    out.st.resize(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        out.st[i].pts = cfg.points[i] + cfg.pairs[i];
        out.st[i].tan = cfg.tangents[i];
    }
    out.known.resize(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        out.known[j] = cfg.node_lines[j] == 2;
        if (out.known[j])
            for (int c : nodes[j].components) out.st[c].pts += 1;
    }
    std::vector<bool> tangency_applied(nodes.size(), false), direction_applied(nodes.size(), false);
    auto& st = out.st;

    for (;;) {
        bool progress = false;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const auto& nd = nodes[j];
            std::vector<int> fx, uf;
            for (int c : nd.components) (st[c].fixed ? fx : uf).push_back(c);
            if (!out.known[j]) {
                const int k = cfg.node_lines[j];
                if (k == 1 && !fx.empty()) {
                    // The node lies on the fixed image and on the given line.
                    if (fx.size() >= 2) return std::nullopt;
                    out.mult *= image_degree(comps[fx[0]].image);
                    out.known[j] = true;
                    progress = true;
                    for (int c : uf) st[c].pts += 1;
                } else if (k == 0 && nd.components.size() == 3 && fx.size() >= 2) {
                    if (fx.size() == 3) return std::nullopt;
                    out.mult *= image_degree(comps[fx[0]].image) * image_degree(comps[fx[1]].image);
                    out.known[j] = true;
                    progress = true;
                    for (int c : uf) st[c].pts += 1;
                } else if (k == 0 && nd.contact == Contact::Tangent && fx.size() == 1 && !tangency_applied[j]) {
                    tangency_applied[j] = true;
                    st[uf[0]].tanfixed += 1;
                    progress = true;
                }
            }
            if (out.known[j] && nd.contact == Contact::Tangent && fx.size() == 1 && !direction_applied[j]) {
                direction_applied[j] = true;
                st[uf[0]].dirs += 1;
                progress = true;
            }
        }
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (!st[i].fixed && st[i].conditions() > family_dimension(comps[i].image)) return std::nullopt;
        if (!progress) {
            for (std::size_t i = 0; i < comps.size(); ++i) {
                if (!st[i].fixed && st[i].conditions() == family_dimension(comps[i].image)) {
                    out.mult *= count_fixed(div.conic_table, comps[i], st[i]);
                    st[i].fixed = true;
                    progress = true;
                    break;
                }
            }
        }
        if (!progress) break;
    }
    return out;
}

/// Ways to choose which intersection points of two fixed images are the
/// unknown transverse nodes between them.
inline Integer node_labelings(const DivisorSpec& div, const std::vector<bool>& known) {
    std::map<std::pair<int, int>, std::pair<int, int>> groups;  // (known, unknown)
    for (std::size_t j = 0; j < div.nodes.size(); ++j) {
        const auto& nd = div.nodes[j];
        if (nd.components.size() != 2 || nd.contact != Contact::Transverse) continue;
        auto key = std::minmax(nd.components[0], nd.components[1]);
        auto& g = groups[key];
        (known[j] ? g.first : g.second) += 1;
    }
    Integer ways = 1;
    for (const auto& [key, g] : groups) {
        int available = image_degree(div.components[key.first].image) * image_degree(div.components[key.second].image) - g.first;
        ways *= falling_factorial(available, g.second);
    }
    return ways;
}

struct Geometric {
    LinForm value;
    Resolution resolution;
    bool data_backed = false;
};

inline std::optional<Geometric> joint(const DivisorSpec& div, const Configuration& cfg, const Solved& s,
                                      const std::vector<int>& unfixed) {
    if (unfixed.size() != 2) return std::nullopt;
    int c = -1, l = -1;
    for (int i : unfixed) (div.components[i].image == ImageKind::Conic ? c : l) = i;
    if (c < 0 || l < 0) return std::nullopt;
    if (s.st[c].pts + s.st[c].tan != 4 || s.st[l].pts != 1) return std::nullopt;

    std::vector<std::size_t> unknown;
    for (std::size_t j = 0; j < div.nodes.size(); ++j)
        if (!s.known[j]) unknown.push_back(j);
    const Integer npt = div.conic_table.count_or_zero(s.st[c].pts + 1, s.st[c].tan);
    const Integer ntan = div.conic_table.count_or_zero(s.st[c].pts, s.st[c].tan + 1);

    auto on_line = [&](std::size_t j, Contact contact) {
        return cfg.node_lines[j] == 1 && div.nodes[j].contact == contact;
    };
    if (unknown.size() == 2 && on_line(unknown[0], Contact::Transverse) && on_line(unknown[1], Contact::Transverse)) {
        return Geometric{LinForm(Integer(s.mult * joint_two_nodes(npt))), Resolution::JointTwoNodes};
    }
    if (unknown.size() == 1 && on_line(unknown[0], Contact::Tangent)) {
        return Geometric{LinForm(Integer(s.mult * joint_tangent_node(npt, ntan))), Resolution::JointTangentNode};
    }
    return std::nullopt;
}

inline LinForm collisions(const ModuliClass& m, const Integer& branch, const Integer& marked) {
    return m.branch * Rational(branch) + m.marked * Rational(marked);
}

/// Configurations with a moduli-constrained cover: the image data moves in a
/// one-parameter family and the count is the degree of the moduli divisor on it.
inline std::optional<Geometric> moduli_count(const DivisorSpec& div, const Configuration& cfg, const Solved& s,
                                             const std::vector<int>& unfixed, int L) {
    const auto& comp = div.components[L];
    const ModuliClass& cls = *comp.moduli;
    const int nb = cfg.pairs[L] + cfg.singles[L];
    const int singles = cfg.singles[L];
    const int budget = div.free_branch_points(L);
    const Rational mult(s.mult);
    const bool has_marked = !div.nodes.empty();

    if (unfixed.empty()) {
        // Everything fixed, one branch point left free to move along the image.
        if (nb != budget - 1) return std::nullopt;
        return Geometric{collisions(cls, nb, has_marked ? 1 : 0) * mult, Resolution::ModuliFixed};
    }
    if (nb != budget) return std::nullopt;

    auto only = [&](std::initializer_list<int> want) {
        std::vector<int> w(want);
        std::sort(w.begin(), w.end());
        return w == unfixed;
    };
    const Integer pair_collisions = binomial(singles, 2);

    if (!has_marked) {
        if (only({L}) && s.st[L].pts == 1)
            return Geometric{collisions(cls, pair_collisions, 0) * mult, Resolution::ModuliPencil};
        throw std::logic_error("unclassified moduli configuration on " + div.name);
    }

    // One marked point: the image of the single node.
    if (div.nodes.size() != 1 || div.components.size() != 2) {
        throw std::logic_error("moduli engine supports one node joining two components");
    }
    const int m = 1 - L;
    const bool known = s.known[0];
    if (s.st[L].fixed && only({m}) && s.st[m].pts == 1 && !known) {
        return Geometric{collisions(cls, 0, nb) * mult, Resolution::ModuliMarkedMoving};
    }
    if (!s.st[L].fixed && s.st[L].pts == 1) {
        if (known && only({L})) {
            if (div.centered_pencil_value) {
                if (singles != budget) throw std::logic_error("centered pencil value assumes all branch points move");
                return Geometric{*div.centered_pencil_value * mult, Resolution::ModuliCenteredPencil, true};
            }
            return Geometric{collisions(cls, pair_collisions, 0) * mult, Resolution::ModuliCenteredPencil};
        }
        if (!known) {
            const bool fixed_line = (only({L}) && cfg.node_lines[0] == 0) ||
                                    (only({L, m}) && cfg.node_lines[0] == 1 && s.st[m].pts == 1);
            if (fixed_line)
                return Geometric{collisions(cls, pair_collisions, singles) * mult, Resolution::ModuliPencilOnLine};
        }
    }
    // The remaining families leave the moduli of the marked cover constant, so
    // a general divisor representative misses them.
    return std::nullopt;
}

inline std::optional<Geometric> geometric(const DivisorSpec& div, const Configuration& cfg) {
    auto solved = propagate(div, cfg);
    if (!solved) return std::nullopt;
    std::vector<int> unfixed;
    int moduli = -1;
    for (std::size_t i = 0; i < div.components.size(); ++i) {
        if (!solved->st[i].fixed) unfixed.push_back(static_cast<int>(i));
        if (div.components[i].moduli) moduli = static_cast<int>(i);
    }
    if (moduli >= 0) return moduli_count(div, cfg, *solved, unfixed, moduli);
    if (unfixed.empty()) {
        return Geometric{LinForm(Integer(solved->mult * node_labelings(div, solved->known))), Resolution::Sequential};
    }
    if (auto j = joint(div, cfg, *solved, unfixed)) return j;
    throw std::logic_error("no rule resolves a configuration of " + div.name);
}

inline void compositions(int total, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur.push_back(x);
        compositions(total - x, parts, cur, out);
        cur.pop_back();
    }
}

template <class F>
void cartesian(const std::vector<std::vector<int>>& ranges, F&& f) {
    std::vector<int> pick(ranges.size(), 0);
    std::vector<std::size_t> idx(ranges.size(), 0);
    for (const auto& r : ranges)
        if (r.empty()) return;
    for (;;) {
        for (std::size_t i = 0; i < ranges.size(); ++i) pick[i] = ranges[i][idx[i]];
        f(pick);
        std::size_t i = 0;
        for (; i < ranges.size(); ++i) {
            if (++idx[i] < ranges[i].size()) break;
            idx[i] = 0;
        }
        if (i == ranges.size()) return;
    }
}

}  // namespace detail

/// Every labeled configuration of a point conditions and total - a line
/// conditions with a nonzero contribution, in a deterministic order.
inline Column enumerate(const DivisorSpec& div, int a) {
    if (a < 0 || a > div.total_conditions) {
        throw std::invalid_argument("point count " + std::to_string(a) + " outside 0.." + std::to_string(div.total_conditions));
    }
    const int b = div.total_conditions - a;
    const std::size_t nc = div.components.size();
    const std::size_t nn = div.nodes.size();

    // Per component: candidate (pairs, singles) splits of the free branch points.
    std::vector<std::vector<int>> branch_choices(nc);  // encoded as pairs * 64 + singles
    for (std::size_t i = 0; i < nc; ++i) {
        const auto& c = div.components[i];
        if (c.cover_degree == 1) {
            branch_choices[i] = {0};
            continue;
        }
        const int free = div.free_branch_points(static_cast<int>(i));
        std::vector<int> totals = c.moduli ? std::vector<int>{free - 1, free} : std::vector<int>{free};
        for (int nb : totals)
            for (int q = 0; q <= nb; ++q) branch_choices[i].push_back(q * 64 + (nb - q));
    }
    std::vector<std::vector<int>> tangent_choices(nc);
    for (std::size_t i = 0; i < nc; ++i) {
        if (div.components[i].image == ImageKind::Conic) {
            for (int t = 0; t <= family_dimension(ImageKind::Conic); ++t) tangent_choices[i].push_back(t);
        } else {
            tangent_choices[i] = {0};
        }
    }
    std::vector<std::vector<int>> node_choices(nn, std::vector<int>{0, 1, 2});

    std::vector<std::vector<int>> point_splits;
    std::vector<int> cur;
    detail::compositions(a, nc, cur, point_splits);

    Column out;
    const Rational sym(div.symmetry_order());
    for (const auto& p : point_splits) {
        detail::cartesian(branch_choices, [&](const std::vector<int>& bc) {
            detail::cartesian(tangent_choices, [&](const std::vector<int>& tc) {
                auto visit_nodes = [&](const std::vector<int>& kc) {
                    Configuration cfg;
                    cfg.points = p;
                    for (int e : bc) {
                        cfg.pairs.push_back(e / 64);
                        cfg.singles.push_back(e % 64);
                    }
                    cfg.tangents = tc;
                    cfg.node_lines = kc;
                    if (cfg.line_conditions() != b) return;
                    auto g = detail::geometric(div, cfg);
                    if (!g || g->value.is_zero()) return;

                    Term t;
                    t.config = cfg;
                    t.resolution = g->resolution;
                    t.data_backed = g->data_backed;
                    t.geometric = g->value;
                    t.point_partitions = multinomial(a, {p.begin(), p.end()});
                    Integer denom = 1;
                    for (std::size_t i = 0; i < nc; ++i)
                        denom *= pow_int(2, cfg.pairs[i]) * factorial(cfg.pairs[i]) * factorial(cfg.singles[i]) *
                                 factorial(cfg.tangents[i]);
                    for (int k : kc) denom *= factorial(k);
                    t.line_partitions = exact_div(factorial(b), denom);
                    Rational m = 1;
                    for (std::size_t i = 0; i < nc; ++i) {
                        const auto& c = div.components[i];
                        m *= Rational(pow_int(c.cover_degree, cfg.points[i] + cfg.tangents[i]) *
                                      pow_int(image_degree(c.image), cfg.singles[i]));
                        m *= c.covers;
                    }
                    for (std::size_t j = 0; j < nn; ++j)
                        m *= Rational(pow_int(div.nodes[j].line_multiplicity, kc[j]) * div.nodes[j].attachments);
                    t.multiplicity = m;
                    t.contribution =
                        t.geometric * (Rational(t.point_partitions * t.line_partitions) * t.multiplicity / sym);
                    out.total += t.contribution;
                    out.terms.push_back(std::move(t));
                };
                if (nn == 0) {
                    visit_nodes({});
                } else {
                    detail::cartesian(node_choices, visit_nodes);
                }
            });
        });
    }
    return out;
}

/// Image of a configuration under a graph automorphism.
inline Configuration apply(const Symmetry& s, const Configuration& c) {
    Configuration r = c;
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        r.points[s.components[i]] = c.points[i];
        r.pairs[s.components[i]] = c.pairs[i];
        r.singles[s.components[i]] = c.singles[i];
        r.tangents[s.components[i]] = c.tangents[i];
    }
    for (std::size_t j = 0; j < s.nodes.size(); ++j) r.node_lines[s.nodes[j]] = c.node_lines[j];
    return r;
}

/// Configurations up to the symmetries of the divisor, with summed contributions.
struct Case {
    Configuration representative;  // smallest member of the orbit
    std::vector<std::size_t> members;  // indices into Column::terms
    LinForm subtotal;
    Resolution resolution = Resolution::Sequential;
    bool data_backed = false;
};

inline std::vector<Case> cases(const DivisorSpec& div, const Column& col) {
    std::vector<Case> out;
    std::map<Configuration, std::size_t> where;
    for (std::size_t i = 0; i < col.terms.size(); ++i) {
        Configuration key = col.terms[i].config;
        for (const auto& s : div.symmetries) key = std::min(key, apply(s, col.terms[i].config));
        auto [it, inserted] = where.emplace(key, out.size());
        if (inserted) {
            Case c;
            c.representative = key;
            c.resolution = col.terms[i].resolution;
            out.push_back(std::move(c));
        }
        Case& c = out[it->second];
        c.members.push_back(i);
        c.subtotal += col.terms[i].contribution;
        c.data_backed = c.data_backed || col.terms[i].data_backed;
    }
    return out;
}

/// One-line description such as "c: 0 pts, 3 tan | l: 1 pairs, 5 singles | n1: 1 line".
inline std::string describe(const DivisorSpec& div, const Configuration& c) {
    std::string out;
    for (std::size_t i = 0; i < div.components.size(); ++i) {
        if (!out.empty()) out += " | ";
        out += div.components[i].name + ": " + std::to_string(c.points[i]) + " pts";
        if (div.components[i].cover_degree > 1)
            out += ", " + std::to_string(c.pairs[i]) + " pairs, " + std::to_string(c.singles[i]) + " singles";
        if (div.components[i].image == ImageKind::Conic) out += ", " + std::to_string(c.tangents[i]) + " tan";
    }
    for (std::size_t j = 0; j < div.nodes.size(); ++j)
        out += " | " + div.nodes[j].name + ": " + std::to_string(c.node_lines[j]) + " lines";
    return out;
}

}  // namespace charnum::config
