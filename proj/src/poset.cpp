#include "conormal/poset.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace conormal {

namespace {

std::string quoted_set(const IndexSet& s) { return index_set_str(s); }

bool strictly_increasing(const IndexSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

IndexSet erase_index(const IndexSet& s, int i) {
    IndexSet out;
    out.reserve(s.size() - 1);
    for (int k : s)
        if (k != i) out.push_back(k);
    return out;
}

}  // namespace

std::string index_set_str(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "}";
    return out;
}

std::string ValidationReport::str() const {
    std::string out;
    for (const Violation& v : violations) {
        out += v.rule;
        out += ": ";
        out += v.detail;
        out += "\n";
    }
    return out;
}

CornerPoset::CornerPoset(int n, std::vector<Face> faces, std::vector<Adjacency> adjacencies)
    : n_(n), faces_(std::move(faces)), adjacencies_(std::move(adjacencies)) {
    d_ = 0;
    for (const Face& f : faces_) d_ = std::max(d_, f.codim);
}

const Face* CornerPoset::find_face(std::string_view id) const {
    for (const Face& f : faces_)
        if (f.id == id) return &f;
    return nullptr;
}

std::vector<const Face*> CornerPoset::faces_of_codim(int p) const {
    std::vector<const Face*> out;
    for (const Face& f : faces_)
        if (f.codim == p) out.push_back(&f);
    std::sort(out.begin(), out.end(), [](const Face* a, const Face* b) {
        if (a->index_set != b->index_set) return a->index_set < b->index_set;
        return a->id < b->id;
    });
    return out;
}

ValidationReport validate(const CornerPoset& poset) {
    ValidationReport report;
    auto flag = [&](std::string rule, std::string detail) {
        report.violations.push_back({std::move(rule), std::move(detail)});
    };

    const int n = poset.hypersurface_count();

    // Face-level shape.
    for (const Face& f : poset.faces()) {
        if (f.codim < 0) {
            flag("face-shape", "face " + f.id + ": negative codimension");
            continue;
        }
        if (static_cast<int>(f.index_set.size()) != f.codim)
            flag("face-shape", "face " + f.id + ": index set " + quoted_set(f.index_set) +
                                   " has size " + std::to_string(f.index_set.size()) +
                                   ", codim is " + std::to_string(f.codim));
        if (!strictly_increasing(f.index_set))
            flag("face-shape",
                 "face " + f.id + ": index set " + quoted_set(f.index_set) + " not strictly increasing");
        for (int i : f.index_set)
            if (i < 1 || i > n)
                flag("face-shape", "face " + f.id + ": index " + std::to_string(i) +
                                       " outside 1.." + std::to_string(n));
    }

    // Unique ids; adjacency references are meaningless without this.
    std::unordered_map<std::string, int> id_count;
    for (const Face& f : poset.faces()) ++id_count[f.id];
    bool ids_ok = true;
    for (const auto& [id, count] : id_count)
        if (count > 1) {
            flag("duplicate-face-id", "face id " + id + " declared " + std::to_string(count) + " times");
            ids_ok = false;
        }

    // Exactly one codim-0 face (X connected).
    {
        std::vector<std::string> zero;
        for (const Face& f : poset.faces())
            if (f.codim == 0) zero.push_back(f.id);
        if (zero.size() != 1) {
            std::string list;
            for (const auto& id : zero) list += (list.empty() ? "" : ", ") + id;
            flag("connectedness", "expected exactly one codim-0 face, found " +
                                      std::to_string(zero.size()) + (list.empty() ? "" : " (" + list + ")"));
        }
    }

    // Exactly n codim-1 faces, index sets {1},...,{n} once each (hypersurfaces connected).
    {
        std::map<int, int> hyper_count;
        for (const Face& f : poset.faces())
            if (f.codim == 1 && f.index_set.size() == 1) ++hyper_count[f.index_set[0]];
        for (int i = 1; i <= n; ++i) {
            auto it = hyper_count.find(i);
            if (it == hyper_count.end())
                flag("hypersurface-missing", "no codim-1 face with index set {" + std::to_string(i) + "}");
            else if (it->second > 1)
                flag("hypersurface-connected", "hypersurface " + std::to_string(i) +
                                                   " not connected: " + std::to_string(it->second) +
                                                   " codim-1 faces share index set {" + std::to_string(i) +
                                                   "}");
        }
    }

    if (!ids_ok) return report;  // adjacency references are ambiguous past this point

    std::unordered_map<std::string_view, const Face*> face_by_id;
    for (const Face& f : poset.faces()) face_by_id.emplace(f.id, &f);
    auto lookup = [&face_by_id](const std::string& id) -> const Face* {
        auto it = face_by_id.find(id);
        return it == face_by_id.end() ? nullptr : it->second;
    };

    // Adjacency structure.
    bool adjacencies_ok = true;
    std::set<std::tuple<std::string, std::string, int>> seen_adj;
    for (const Adjacency& a : poset.adjacencies()) {
        const Face* f = lookup(a.lower);
        const Face* g = lookup(a.upper);
        if (!f || !g) {
            flag("adjacency-face", "adjacency (" + a.lower + ", " + a.upper + "): unknown face id " +
                                       (!f ? a.lower : a.upper));
            adjacencies_ok = false;
            continue;
        }
        bool structural =
            f->codim == g->codim + 1 &&
            std::find(f->index_set.begin(), f->index_set.end(), a.missing_index) != f->index_set.end() &&
            g->index_set == erase_index(f->index_set, a.missing_index);
        if (!structural) {
            flag("adjacency-structure", "adjacency (" + a.lower + ", " + a.upper + ", index " +
                                            std::to_string(a.missing_index) +
                                            "): index sets are not a singleton difference");
            adjacencies_ok = false;
            continue;
        }
        if (!seen_adj.insert({a.lower, a.upper, a.missing_index}).second) {
            flag("adjacency-duplicate", "adjacency (" + a.lower + ", " + a.upper + ", index " +
                                            std::to_string(a.missing_index) + ") repeated");
            adjacencies_ok = false;
        }
    }
    if (!adjacencies_ok) return report;

    // Completeness: for every face f and every i in I(f), exactly one adjacency (f, ., i).
    std::map<std::pair<std::string, int>, std::vector<const Adjacency*>> by_lower_index;
    for (const Adjacency& a : poset.adjacencies())
        by_lower_index[{a.lower, a.missing_index}].push_back(&a);

    bool complete = true;
    for (const Face& f : poset.faces())
        for (int i : f.index_set) {
            auto it = by_lower_index.find({f.id, i});
            const std::size_t count = it == by_lower_index.end() ? 0 : it->second.size();
            if (count != 1) {
                flag("completeness", "completeness violated at face " + f.id + ", index " +
                                         std::to_string(i) + ": found " + std::to_string(count) +
                                         " adjacencies, need exactly 1");
                complete = false;
            }
        }
    if (!complete) return report;

    // Diamond property: descending by i then j must close up with j then i.
    std::set<std::pair<std::string, std::string>> adj_pairs;
    std::map<std::pair<std::string, int>, const Adjacency*> unique_adj;
    for (const Adjacency& a : poset.adjacencies()) {
        adj_pairs.insert({a.lower, a.upper});
        unique_adj[{a.lower, a.missing_index}] = &a;
    }
    for (const Adjacency& a : poset.adjacencies()) {
        const Face* g = lookup(a.upper);
        for (int j : g->index_set) {
            const Adjacency* gh = unique_adj.at({g->id, j});
            const Adjacency* fg2 = unique_adj.at({a.lower, j});
            if (!adj_pairs.count({fg2->upper, gh->upper}))
                flag("diamond", "faces " + a.lower + " -> " + a.upper + " -> " + gh->upper +
                                    ": no closing chain through index " + std::to_string(j));
        }
    }

    return report;
}

void require_valid(const CornerPoset& poset) {
    ValidationReport report = validate(poset);
    if (!report.ok()) throw ValidationError("invalid corner poset:\n" + report.str());
}

CornerPoset closed_manifold() { return CornerPoset(0, {Face{"X", 0, {}}}, {}); }

CornerPoset boundary_components(int p) {
    if (p < 1)
        throw std::invalid_argument("boundary_components: p must be >= 1 (use closed_manifold)");
    std::vector<Face> faces{Face{"X", 0, {}}};
    std::vector<Adjacency> adj;
    for (int i = 1; i <= p; ++i) {
        faces.push_back(Face{"H" + std::to_string(i), 1, {i}});
        adj.push_back(Adjacency{"H" + std::to_string(i), "X", i});
    }
    return CornerPoset(p, std::move(faces), std::move(adj));
}

CornerPoset interval() { return boundary_components(2); }

CornerPoset simplex(int k) {
    if (k < 1) throw std::invalid_argument("simplex: k must be >= 1");
    const int n = k + 1;
    std::vector<Face> faces;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        IndexSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        if (static_cast<int>(s.size()) > k) continue;
        std::string id = s.empty() ? "X" : "F";
        for (std::size_t i = 0; i < s.size(); ++i) id += (i ? "_" : "") + std::to_string(s[i]);
        faces.push_back(Face{std::move(id), static_cast<int>(s.size()), std::move(s)});
    }
    std::vector<Adjacency> adj = auto_adjacency(faces);
    return CornerPoset(n, std::move(faces), std::move(adj));
}

CornerPoset product(const CornerPoset& a, const CornerPoset& b) {
    require_valid(a);
    require_valid(b);
    const int na = a.hypersurface_count();

    std::vector<Face> faces;
    faces.reserve(a.faces().size() * b.faces().size());
    for (const Face& fa : a.faces())
        for (const Face& fb : b.faces()) {
            IndexSet s = fa.index_set;
            for (int i : fb.index_set) s.push_back(i + na);
            faces.push_back(Face{fa.id + "*" + fb.id, fa.codim + fb.codim, std::move(s)});
        }

    std::vector<Adjacency> adj;
    for (const Adjacency& aa : a.adjacencies())
        for (const Face& fb : b.faces())
            adj.push_back(Adjacency{aa.lower + "*" + fb.id, aa.upper + "*" + fb.id, aa.missing_index});
    for (const Face& fa : a.faces())
        for (const Adjacency& ab : b.adjacencies())
            adj.push_back(
                Adjacency{fa.id + "*" + ab.lower, fa.id + "*" + ab.upper, ab.missing_index + na});

    CornerPoset result(na + b.hypersurface_count(), std::move(faces), std::move(adj));

    ProductProvenance prov;
    auto append = [&prov](const CornerPoset& factor) {
        if (factor.provenance())
            for (int c : factor.provenance()->factor_codims) prov.factor_codims.push_back(c);
        else
            prov.factor_codims.push_back(factor.max_codim());
    };
    append(a);
    append(b);
    result.set_provenance(std::move(prov));
    return result;
}

CornerPoset hypercube(int k) {
    if (k < 1) throw std::invalid_argument("hypercube: k must be >= 1");
    CornerPoset cube = interval();
    for (int i = 1; i < k; ++i) cube = product(cube, interval());
    return cube;
}

std::vector<Adjacency> auto_adjacency(const std::vector<Face>& faces) {
    std::map<IndexSet, const Face*> by_set;
    for (const Face& f : faces) {
        auto [it, inserted] = by_set.emplace(f.index_set, &f);
        if (!inserted)
            throw AmbiguityError("ambiguous adjacency: index set " + quoted_set(f.index_set) +
                                 " occurs more than once (faces " + it->second->id + ", " + f.id + ")");
    }
    std::vector<Adjacency> adj;
    for (const Face& f : faces)
        for (int i : f.index_set) {
            auto it = by_set.find(erase_index(f.index_set, i));
            if (it != by_set.end()) adj.push_back(Adjacency{f.id, it->second->id, i});
        }
    return adj;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, int line_no, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected integer for " + what + ", got `" + tok + "`");
    return value;
}

}  // namespace

CornerPoset read_poset(std::istream& in) {
    enum class Stage { Magic, Count, Body };
    Stage stage = Stage::Magic;

    int n = 0;
    std::vector<Face> faces;
    std::vector<Adjacency> adjacencies;
    std::unordered_map<std::string, std::size_t> by_id;
    bool seen_adj = false;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;

        switch (stage) {
            case Stage::Magic:
                if (tok.size() != 2 || tok[0] != "corners")
                    throw ParseError(line_no, "expected header `corners 1`");
                if (tok[1] != "1")
                    throw ParseError(line_no, "unsupported format version `" + tok[1] + "`");
                stage = Stage::Count;
                break;

            case Stage::Count:
                if (tok.size() != 2 || tok[0] != "n")
                    throw ParseError(line_no, "expected `n <count>` after header");
                n = parse_int(tok[1], line_no, "hypersurface count");
                if (n < 0) throw ParseError(line_no, "hypersurface count must be >= 0");
                stage = Stage::Body;
                break;

            case Stage::Body:
                if (tok[0] == "face") {
                    if (seen_adj) throw ParseError(line_no, "face line after adj line");
                    if (tok.size() < 3) throw ParseError(line_no, "expected `face <id> <codim> <indices...>`");
                    Face f;
                    f.id = tok[1];
                    f.codim = parse_int(tok[2], line_no, "codimension");
                    if (f.codim < 0) throw ParseError(line_no, "codimension must be >= 0");
                    if (static_cast<int>(tok.size()) - 3 != f.codim)
                        throw ParseError(line_no, "face " + f.id + ": codim " + std::to_string(f.codim) +
                                                      " but " + std::to_string(tok.size() - 3) +
                                                      " indices given");
                    for (std::size_t i = 3; i < tok.size(); ++i)
                        f.index_set.push_back(parse_int(tok[i], line_no, "hypersurface index"));
                    if (!strictly_increasing(f.index_set))
                        throw ParseError(line_no, "face " + f.id + ": indices must be strictly increasing");
                    for (int i : f.index_set)
                        if (i < 1 || i > n)
                            throw ParseError(line_no, "face " + f.id + ": index " + std::to_string(i) +
                                                          " outside 1.." + std::to_string(n));
                    if (!by_id.emplace(f.id, faces.size()).second)
                        throw ParseError(line_no, "duplicate face id " + f.id);
                    faces.push_back(std::move(f));
                } else if (tok[0] == "adj") {
                    if (tok.size() != 3) throw ParseError(line_no, "expected `adj <lower_id> <upper_id>`");
                    seen_adj = true;
                    auto fit = by_id.find(tok[1]);
                    auto git = by_id.find(tok[2]);
                    if (fit == by_id.end()) throw ParseError(line_no, "unknown face id " + tok[1]);
                    if (git == by_id.end()) throw ParseError(line_no, "unknown face id " + tok[2]);
                    const Face& f = faces[fit->second];
                    const Face& g = faces[git->second];
                    // missing_index is derived: I(f) \ I(g) must be a single index.
                    IndexSet diff;
                    for (int i : f.index_set)
                        if (std::find(g.index_set.begin(), g.index_set.end(), i) == g.index_set.end())
                            diff.push_back(i);
                    if (diff.size() != 1 || f.index_set.size() != g.index_set.size() + 1)
                        throw ParseError(line_no, "adj " + f.id + " " + g.id +
                                                      ": index sets are not a singleton difference");
                    adjacencies.push_back(Adjacency{f.id, g.id, diff[0]});
                } else {
                    throw ParseError(line_no, "unknown directive `" + tok[0] + "`");
                }
                break;
        }
    }

    if (stage == Stage::Magic) throw ParseError(line_no + 1, "missing `corners 1` header");
    if (stage == Stage::Count) throw ParseError(line_no + 1, "missing `n <count>` line");

    int d = 0;
    for (const Face& f : faces) d = std::max(d, f.codim);
    if (adjacencies.empty() && d >= 1) adjacencies = auto_adjacency(faces);

    return CornerPoset(n, std::move(faces), std::move(adjacencies));
}

CornerPoset read_poset(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_poset(in);
}

CornerPoset parse(std::istream& in) {
    CornerPoset poset = read_poset(in);
    require_valid(poset);
    return poset;
}

CornerPoset parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

std::string serialize(const CornerPoset& poset) {
    std::ostringstream out;
    out << "corners 1\n";
    out << "n " << poset.hypersurface_count() << "\n";

    std::unordered_map<std::string, std::size_t> order;
    for (int p = 0; p <= poset.max_codim(); ++p)
        for (const Face* f : poset.faces_of_codim(p)) {
            order.emplace(f->id, order.size());
            out << "face " << f->id << " " << f->codim;
            for (int i : f->index_set) out << " " << i;
            out << "\n";
        }

    std::vector<Adjacency> adj = poset.adjacencies();
    auto pos = [&order](const std::string& id) {
        auto it = order.find(id);
        return it == order.end() ? order.size() : it->second;
    };
    std::sort(adj.begin(), adj.end(), [&](const Adjacency& x, const Adjacency& y) {
        return std::tuple(pos(x.lower), x.missing_index, pos(x.upper)) <
               std::tuple(pos(y.lower), y.missing_index, pos(y.upper));
    });
    for (const Adjacency& a : adj) out << "adj " << a.lower << " " << a.upper << "\n";
    return out.str();
}

}  // namespace conormal
