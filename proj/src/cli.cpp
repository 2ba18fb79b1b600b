#include "trimod/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trimod/extensions.hpp"
#include "trimod/sweeps.hpp"

namespace trimod {

namespace {

using nlohmann::json;

enum class Format { json, csv, text };

struct CommonFlags {
    std::string format = "json";
    bool seedless = false;
};

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw input_error("unknown format '" + name + "' (expected json, csv or text)");
}

void reject_seedless(const CommonFlags& common) {
    if (common.seedless) {
        throw input_error("--seedless is reserved; the tool has no randomness");
    }
}

// "lo:hi" (inclusive) or a bare integer.
std::pair<long long, long long> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const Rational v = Rational::parse(text);
        if (!v.is_integer()) throw input_error("expected an integer: '" + text + "'");
        return {v.num(), v.num()};
    }
    const Rational lo = Rational::parse(text.substr(0, colon));
    const Rational hi = Rational::parse(text.substr(colon + 1));
    if (!lo.is_integer() || !hi.is_integer()) {
        throw input_error("range bounds must be integers: '" + text + "'");
    }
    return {lo.num(), hi.num()};
}

const char* minima_name(MinimaType m) {
    switch (m) {
        case MinimaType::c_zero: return "CZero";
        case MinimaType::b_zero: return "BZero";
        case MinimaType::both: return "Both";
    }
    return "";
}

const char* side_name(HiggsSide s) {
    return s == HiggsSide::c_zero ? "c_zero" : "b_zero";
}

HiggsSide parse_side(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (name == "czero" || name == "c_zero" || name == "c") return HiggsSide::c_zero;
    if (name == "bzero" || name == "b_zero" || name == "b") return HiggsSide::b_zero;
    throw input_error("unknown side '" + name + "' (expected czero or bzero)");
}

json j_higgs(const HiggsType& h) {
    return json{{"p", h.p}, {"q", h.q}, {"dv", h.d_v}, {"dw", h.d_w}};
}

json j_triple(const TripleType& t) {
    return json{{"n1", t.n1}, {"n2", t.n2}, {"d1", t.d1}, {"d2", t.d2}};
}

json j_witness(const SubtripleClass& s) {
    return json{{"n1p", s.n1p}, {"n2p", s.n2p}, {"dtot", s.dtot}};
}

json j_wall(const Wall& w) {
    json witnesses = json::array();
    for (const auto& s : w.witnesses) witnesses.push_back(j_witness(s));
    return json{{"alpha", w.alpha.str()}, {"witnesses", witnesses}};
}

json j_chamber(const Chamber& c) {
    return json{{"lower", c.lower.str()}, {"upper", c.upper.str()}};
}

json j_location(const ChamberLocation& loc) {
    switch (loc.kind) {
        case ChamberLocation::Kind::inside:
            return json{{"kind", "inside"}, {"chamber", j_chamber(*loc.chamber)}};
        case ChamberLocation::Kind::on_wall:
            return json{{"kind", "on_wall"}, {"wall", j_wall(*loc.wall)}};
        case ChamberLocation::Kind::out_of_range: return json{{"kind", "out_of_range"}};
    }
    return json{};
}

void emit_json(std::ostream& out, const std::string& command, const json& echo,
               const json& result) {
    json record{{"schema_version", "1"},
                {"command", json{{"name", command}, {"args", echo}}},
                {"result", result}};
    out << record.dump(2) << "\n";
}

void emit_csv(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ",";
        out << header[i];
    }
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << row[i];
        }
        out << "\n";
    }
}

std::string fmt_triple(const TripleType& t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

// Shared state for the walls/chambers commands: normalized triple, range cap,
// and the dualization annotation.
struct EngineSetup {
    TripleType used;
    TripleType input;
    bool dualized = false;
    std::optional<Rational> cap;
    std::string cap_source;  // "explicit" or "default-from-genus"
};

EngineSetup engine_setup(int n1, int n2, long long d1, long long d2,
                         const std::optional<std::string>& cap_text,
                         const std::optional<int>& genus) {
    TripleType input(n1, n2, d1, d2);
    EngineSetup setup{input, input, false, std::nullopt, ""};
    if (input.n1 < input.n2) {
        setup.used = dual(input);
        setup.dualized = true;
    }
    if (setup.used.n1 == setup.used.n2) {
        if (cap_text) {
            setup.cap = Rational::parse(*cap_text);
            setup.cap_source = "explicit";
        } else if (genus) {
            const SurfaceData g(*genus);
            const long long k = g.canonical_degree();
            setup.cap = Rational(std::max<long long>(4LL * g.genus(), 2 * k + 1));
            setup.cap_source = "default-from-genus";
        } else {
            throw input_error("n1 = n2 needs --cap (or --genus for the default cap)");
        }
    } else if (cap_text) {
        throw input_error("--cap is only accepted when n1 = n2");
    }
    return setup;
}

json echo_engine(const EngineSetup& setup, const std::optional<int>& genus,
                 const std::optional<std::string>& alpha_text) {
    json echo{{"n1", setup.input.n1},
              {"n2", setup.input.n2},
              {"d1", setup.input.d1},
              {"d2", setup.input.d2}};
    if (setup.cap) echo["cap"] = setup.cap->str();
    if (genus) echo["genus"] = *genus;
    if (alpha_text) echo["alpha"] = Rational::parse(*alpha_text).str();
    return echo;
}

json engine_result_common(const EngineSetup& setup) {
    json result;
    result["triple"] = j_triple(setup.used);
    result["dualized"] = setup.dualized;
    if (setup.dualized) result["input_triple"] = j_triple(setup.input);
    const AlphaBound bound = alpha_max(setup.used);
    result["alpha_max"] = bound.is_unbounded() ? json("unbounded") : json(bound.value().str());
    if (setup.cap) {
        result["cap"] = setup.cap->str();
        result["cap_source"] = setup.cap_source;
    }
    result["provenance"] = "formula";
    return result;
}

// ---- subcommand handlers -------------------------------------------------

void run_census(std::ostream& out, const CommonFlags& common, int p, int q, int genus,
                const std::string& dv_text, const std::string& dw_text) {
    reject_seedless(common);
    const Format format = parse_format(common.format);
    const auto [dv_lo, dv_hi] = parse_range(dv_text);
    const auto [dw_lo, dw_hi] = parse_range(dw_text);
    const SurfaceData g(genus);
    const DegreeWindow window(dv_lo, dv_hi, dw_lo, dw_hi);
    const auto allowed = census(p, q, g, window);

    if (format == Format::json) {
        json pairs = json::array();
        for (const auto& h : allowed) pairs.push_back(json{{"dv", h.d_v}, {"dw", h.d_w}});
        json echo{{"p", p},  {"q", q},   {"genus", genus},
                  {"dv", json::array({dv_lo, dv_hi})},
                  {"dw", json::array({dw_lo, dw_hi})}};
        json result{{"count", allowed.size()}, {"pairs", pairs}, {"provenance", "formula"}};
        emit_json(out, "census", echo, result);
    } else if (format == Format::csv) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& h : allowed) {
            rows.push_back({std::to_string(h.d_v), std::to_string(h.d_w)});
        }
        emit_csv(out, {"dv", "dw"}, rows);
    } else {
        out << "census p=" << p << " q=" << q << " genus=" << genus << " dv=[" << dv_lo << ","
            << dv_hi << "] dw=[" << dw_lo << "," << dw_hi << "]\n";
        out << "allowed " << allowed.size() << "\n";
        for (const auto& h : allowed) out << h.d_v << " " << h.d_w << "\n";
    }
}

void run_translate(std::ostream& out, const CommonFlags& common, std::optional<int> p,
                   std::optional<int> q, std::optional<long long> dv, std::optional<long long> dw,
                   std::optional<int> n1, std::optional<int> n2, std::optional<long long> d1,
                   std::optional<long long> d2, int genus, std::optional<std::string> side_text) {
    reject_seedless(common);
    const Format format = parse_format(common.format);
    const SurfaceData g(genus);

    const bool higgs_given = p || q || dv || dw;
    const bool triple_given = n1 || n2 || d1 || d2;
    if (higgs_given == triple_given) {
        throw input_error("translate needs either --p/--q/--dv/--dw or --n1/--n2/--d1/--d2");
    }

    if (higgs_given) {
        if (!(p && q && dv && dw)) throw input_error("translate needs all of --p --q --dv --dw");
        const HiggsType h(*p, *q, *dv, *dw);
        const MinimaType m = minima_type(h);

        std::vector<std::pair<HiggsSide, TripleType>> triples;
        if (side_text) {
            const HiggsSide side = parse_side(*side_text);
            triples.emplace_back(side, higgs_to_triple(h, g, side));
        } else if (m == MinimaType::both) {
            triples.emplace_back(HiggsSide::c_zero, higgs_to_triple(h, g, HiggsSide::c_zero));
            triples.emplace_back(HiggsSide::b_zero, higgs_to_triple(h, g, HiggsSide::b_zero));
        } else {
            const HiggsSide side =
                m == MinimaType::c_zero ? HiggsSide::c_zero : HiggsSide::b_zero;
            triples.emplace_back(side, higgs_to_triple(h, g, side));
        }

        if (format == Format::json) {
            json echo{{"p", *p}, {"q", *q}, {"dv", *dv}, {"dw", *dw}, {"genus", genus}};
            if (side_text) echo["side"] = side_name(triples.front().first);
            json out_triples;
            for (const auto& [side, t] : triples) out_triples[side_name(side)] = j_triple(t);
            json result{{"direction", "higgs_to_triple"},
                        {"higgs", j_higgs(h)},
                        {"minima_type", minima_name(m)},
                        {"triples", out_triples},
                        {"provenance", "formula"}};
            emit_json(out, "translate", echo, result);
        } else if (format == Format::csv) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& [side, t] : triples) {
                rows.push_back({minima_name(m), side_name(side), std::to_string(t.n1),
                                std::to_string(t.n2), std::to_string(t.d1),
                                std::to_string(t.d2)});
            }
            emit_csv(out, {"minima_type", "side", "n1", "n2", "d1", "d2"}, rows);
        } else {
            out << "higgs " << h << "\nminima_type " << m << "\n";
            for (const auto& [side, t] : triples) {
                out << side_name(side) << " triple " << fmt_triple(t) << "\n";
            }
        }
        return;
    }

    if (!(n1 && n2 && d1 && d2)) throw input_error("translate needs all of --n1 --n2 --d1 --d2");
    const HiggsSide side = side_text ? parse_side(*side_text) : HiggsSide::c_zero;
    const TripleType t(*n1, *n2, *d1, *d2);
    const HiggsType h = triple_to_higgs(t, g, side);
    const MinimaType m = minima_type(h);

    if (format == Format::json) {
        json echo{{"n1", *n1}, {"n2", *n2}, {"d1", *d1}, {"d2", *d2},
                  {"genus", genus}, {"side", side_name(side)}};
        json result{{"direction", "triple_to_higgs"},
                    {"triple", j_triple(t)},
                    {"higgs", j_higgs(h)},
                    {"minima_type", minima_name(m)},
                    {"provenance", "formula"}};
        emit_json(out, "translate", echo, result);
    } else if (format == Format::csv) {
        emit_csv(out, {"minima_type", "p", "q", "dv", "dw"},
                 {{minima_name(m), std::to_string(h.p), std::to_string(h.q),
                   std::to_string(h.d_v), std::to_string(h.d_w)}});
    } else {
        out << "triple " << fmt_triple(t) << "\nhiggs " << h << "\nminima_type " << m << "\n";
    }
}

void run_walls(std::ostream& out, const CommonFlags& common, int n1, int n2, long long d1,
               long long d2, std::optional<std::string> cap_text, std::optional<int> genus) {
    reject_seedless(common);
    const Format format = parse_format(common.format);
    const EngineSetup setup = engine_setup(n1, n2, d1, d2, cap_text, genus);
    const auto walls = critical_values(setup.used, setup.cap);

    if (format == Format::json) {
        json result = engine_result_common(setup);
        json wall_list = json::array();
        for (const Wall& w : walls) wall_list.push_back(j_wall(w));
        result["walls"] = wall_list;
        if (genus) {
            const SurfaceData g(*genus);
            result["at_2g_minus_2"] =
                j_location(chamber_of(setup.used, Rational(g.canonical_degree()), setup.cap));
        }
        emit_json(out, "walls", echo_engine(setup, genus, std::nullopt), result);
    } else if (format == Format::csv) {
        std::vector<std::vector<std::string>> rows;
        for (const Wall& w : walls) {
            for (const SubtripleClass& s : w.witnesses) {
                rows.push_back({w.alpha.str(), std::to_string(s.n1p), std::to_string(s.n2p),
                                std::to_string(s.dtot)});
            }
        }
        emit_csv(out, {"alpha", "n1p", "n2p", "dtot"}, rows);
    } else {
        out << "triple " << fmt_triple(setup.used);
        if (setup.dualized) out << " (dual of " << fmt_triple(setup.input) << ")";
        out << "\n";
        const AlphaBound bound = alpha_max(setup.used);
        out << "alpha_max ";
        if (bound.is_unbounded()) {
            out << "unbounded, cap " << setup.cap->str() << "\n";
        } else {
            out << bound.value().str() << "\n";
        }
        for (const Wall& w : walls) {
            out << "wall " << w.alpha.str() << ":";
            for (const SubtripleClass& s : w.witnesses) out << " " << s;
            out << "\n";
        }
        if (genus) {
            const SurfaceData g(*genus);
            const auto loc = chamber_of(setup.used, Rational(g.canonical_degree()), setup.cap);
            out << "at 2g-2: ";
            switch (loc.kind) {
                case ChamberLocation::Kind::inside: out << "inside " << *loc.chamber; break;
                case ChamberLocation::Kind::on_wall:
                    out << "on wall " << loc.wall->alpha.str();
                    break;
                case ChamberLocation::Kind::out_of_range: out << "out of range"; break;
            }
            out << "\n";
        }
    }
}

void run_chambers(std::ostream& out, const CommonFlags& common, int n1, int n2, long long d1,
                  long long d2, std::optional<std::string> cap_text, std::optional<int> genus,
                  std::optional<std::string> alpha_text) {
    reject_seedless(common);
    const Format format = parse_format(common.format);
    const EngineSetup setup = engine_setup(n1, n2, d1, d2, cap_text, genus);
    const auto walls = critical_values(setup.used, setup.cap);
    const auto chamber_list = chambers(setup.used, setup.cap);

    if (format == Format::json) {
        json result = engine_result_common(setup);
        json wall_list = json::array();
        for (const Wall& w : walls) wall_list.push_back(j_wall(w));
        result["walls"] = wall_list;
        json chamber_json = json::array();
        for (const Chamber& c : chamber_list) chamber_json.push_back(j_chamber(c));
        result["chambers"] = chamber_json;
        if (genus) {
            const SurfaceData g(*genus);
            result["at_2g_minus_2"] =
                j_location(chamber_of(setup.used, Rational(g.canonical_degree()), setup.cap));
        }
        if (alpha_text) {
            result["at_alpha"] =
                j_location(chamber_of(setup.used, Rational::parse(*alpha_text), setup.cap));
        }
        emit_json(out, "chambers", echo_engine(setup, genus, alpha_text), result);
    } else if (format == Format::csv) {
        std::vector<std::vector<std::string>> rows;
        for (const Chamber& c : chamber_list) rows.push_back({c.lower.str(), c.upper.str()});
        emit_csv(out, {"lower", "upper"}, rows);
    } else {
        out << "triple " << fmt_triple(setup.used);
        if (setup.dualized) out << " (dual of " << fmt_triple(setup.input) << ")";
        out << "\n";
        const AlphaBound bound = alpha_max(setup.used);
        out << "alpha_max ";
        if (bound.is_unbounded()) {
            out << "unbounded, cap " << setup.cap->str() << "\n";
        } else {
            out << bound.value().str() << "\n";
        }
        out << "walls";
        for (const Wall& w : walls) out << " " << w.alpha.str();
        out << "\n";
        for (const Chamber& c : chamber_list) out << "chamber " << c << "\n";
        auto describe = [&](const char* label, const ChamberLocation& loc) {
            out << label << " ";
            switch (loc.kind) {
                case ChamberLocation::Kind::inside: out << "inside " << *loc.chamber; break;
                case ChamberLocation::Kind::on_wall:
                    out << "on wall " << loc.wall->alpha.str();
                    break;
                case ChamberLocation::Kind::out_of_range: out << "out of range"; break;
            }
            out << "\n";
        };
        if (genus) {
            const SurfaceData g(*genus);
            describe("at 2g-2:", chamber_of(setup.used, Rational(g.canonical_degree()), setup.cap));
        }
        if (alpha_text) {
            describe("at alpha:", chamber_of(setup.used, Rational::parse(*alpha_text), setup.cap));
        }
    }
}

void run_chi(std::ostream& out, const CommonFlags& common, int n1, int n2, long long d1,
             long long d2, std::optional<int> n1b, std::optional<int> n2b,
             std::optional<long long> d1b, std::optional<long long> d2b, int genus) {
    reject_seedless(common);
    const Format format = parse_format(common.format);
    const SurfaceData g(genus);
    const TripleType tpp(n1, n2, d1, d2);
    const bool second_given = n1b || n2b || d1b || d2b;
    if (second_given && !(n1b && n2b && d1b && d2b)) {
        throw input_error("second triple needs all of --n1b --n2b --d1b --d2b");
    }
    const TripleType tp = second_given ? TripleType(*n1b, *n2b, *d1b, *d2b) : tpp;
    const ChiReport report = hom_complex_chi(tpp, tp, g);
    const bool self = !second_given;
    std::optional<long long> dim;
    if (self && tpp.n1 >= 1 && tpp.n2 >= 1) dim = expected_dim(tpp, g);

    if (format == Format::json) {
        json echo{{"n1", n1}, {"n2", n2}, {"d1", d1}, {"d2", d2}, {"genus", genus}};
        if (second_given) {
            echo["n1b"] = *n1b;
            echo["n2b"] = *n2b;
            echo["d1b"] = *d1b;
            echo["d2b"] = *d2b;
        }
        json result{{"chi_total", report.chi_total},
                    {"chi_term0", report.chi_term0},
                    {"chi_term1", report.chi_term1},
                    {"provenance", "formula"}};
        if (dim) result["expected_dim"] = *dim;
        emit_json(out, "chi", echo, result);
    } else if (format == Format::csv) {
        std::vector<std::string> header{"chi_term0", "chi_term1", "chi_total"};
        std::vector<std::string> row{std::to_string(report.chi_term0),
                                     std::to_string(report.chi_term1),
                                     std::to_string(report.chi_total)};
        if (dim) {
            header.push_back("expected_dim");
            row.push_back(std::to_string(*dim));
        }
        emit_csv(out, header, {row});
    } else {
        out << "chi_term0 " << report.chi_term0 << "\nchi_term1 " << report.chi_term1
            << "\nchi_total " << report.chi_total << "\n";
        if (dim) out << "expected_dim " << *dim << "\n";
    }
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) parts.push_back(token);
    return parts;
}

void run_minima(std::ostream& out, const CommonFlags& common, const std::string& ranks_text,
                const std::string& degrees_text, const std::string& sides_text, int genus) {
    reject_seedless(common);
    const Format format = parse_format(common.format);
    const SurfaceData g(genus);

    const auto ranks = split_commas(ranks_text);
    const auto sides = split_commas(sides_text);
    const auto degrees = degrees_text.empty()
                             ? std::vector<std::string>(ranks.size(), "0")
                             : split_commas(degrees_text);
    if (ranks.size() != sides.size() || ranks.size() != degrees.size()) {
        throw input_error("--ranks, --degrees and --sides must have the same length");
    }

    std::vector<ChainPiece> pieces;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const Rational r = Rational::parse(ranks[i]);
        const Rational d = Rational::parse(degrees[i]);
        if (!r.is_integer() || !d.is_integer()) {
            throw input_error("chain ranks and degrees must be integers");
        }
        std::string side = sides[i];
        std::transform(side.begin(), side.end(), side.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (side != "v" && side != "w") {
            throw input_error("chain sides must be V or W");
        }
        pieces.push_back(ChainPiece{static_cast<int>(r.num()), d.num(),
                                    side == "v" ? PieceSide::V : PieceSide::W});
    }
    const HodgeChain chain(std::move(pieces));
    const MinimaVerdict verdict = classify_chain(chain, g);
    const auto grading = adjoint_grading(chain);

    std::string verdict_name;
    switch (verdict.kind) {
        case MinimaVerdict::Kind::minimum: verdict_name = "Minimum"; break;
        case MinimaVerdict::Kind::not_minimum_numerical:
            verdict_name = "NotMinimumNumerical";
            break;
        case MinimaVerdict::Kind::not_minimum_by_lemma: verdict_name = "NotMinimumByLemma"; break;
    }

    bool two_sided = true;
    HiggsType higgs(1, 1, 0, 0);
    try {
        higgs = chain_to_higgs(chain);
    } catch (const input_error&) {
        two_sided = false;
    }

    if (format == Format::json) {
        json echo{{"ranks", ranks_text}, {"degrees", degrees_text}, {"sides", sides_text},
                  {"genus", genus}};
        json grading_json = json::array();
        for (const GradedPiece& u : grading) {
            grading_json.push_back(json{{"k", u.k}, {"rank", u.rank}, {"degree", u.degree}});
        }
        json result{{"verdict", verdict_name},
                    {"grading", grading_json},
                    {"provenance", "formula"}};
        if (verdict.kind == MinimaVerdict::Kind::not_minimum_numerical) {
            result["obstruction_k"] = verdict.obstruction_k;
        }
        if (two_sided) result["higgs"] = j_higgs(higgs);
        emit_json(out, "minima", echo, result);
    } else if (format == Format::csv) {
        std::vector<std::string> header{"verdict", "obstruction_k"};
        std::vector<std::string> row{verdict_name,
                                     verdict.kind == MinimaVerdict::Kind::not_minimum_numerical
                                         ? std::to_string(verdict.obstruction_k)
                                         : ""};
        if (two_sided) {
            header.insert(header.end(), {"p", "q", "dv", "dw"});
            row.insert(row.end(), {std::to_string(higgs.p), std::to_string(higgs.q),
                                   std::to_string(higgs.d_v), std::to_string(higgs.d_w)});
        }
        emit_csv(out, header, {row});
    } else {
        out << "verdict " << verdict << "\n";
        for (const GradedPiece& u : grading) {
            out << "U_" << u.k << " rank " << u.rank << " degree " << u.degree << "\n";
        }
        if (two_sided) out << "higgs " << higgs << "\n";
    }
}

int run_check(std::ostream& out, const CommonFlags& common, int pq_max, long long d_abs_higgs,
              int rank_sum, long long d_abs_triple, const std::string& cap_text, bool serial) {
    reject_seedless(common);
    const Format format = parse_format(common.format);
    const ExecPolicy policy = serial ? ExecPolicy::serial : ExecPolicy::parallel;
    const Rational cap = Rational::parse(cap_text);

    long long consistency_checked = 0;
    long long consistency_violations = 0;
    json violation_samples = json::array();
    const DegreeWindow window(-d_abs_higgs, d_abs_higgs, -d_abs_higgs, d_abs_higgs);
    for (int p = 1; p <= pq_max; ++p) {
        for (int q = 1; q <= pq_max; ++q) {
            if (p == q) continue;
            for (int genus : {2, 3, 4}) {
                const auto report = mw_alpha_consistency(p, q, SurfaceData(genus), window, policy);
                consistency_checked += report.checked;
                consistency_violations += static_cast<long long>(report.violations.size());
                for (const auto& v : report.violations) {
                    if (violation_samples.size() < 10) {
                        violation_samples.push_back(json{{"p", v.higgs.p},
                                                         {"q", v.higgs.q},
                                                         {"dv", v.higgs.d_v},
                                                         {"dw", v.higgs.d_w},
                                                         {"genus", genus}});
                    }
                }
            }
        }
    }

    const auto equivalence = wall_equivalence_scan(rank_sum, d_abs_triple, cap, policy);
    json mismatch_samples = json::array();
    for (const auto& m : equivalence.mismatches) {
        if (mismatch_samples.size() >= 10) break;
        mismatch_samples.push_back(j_triple(m.t));
    }

    const bool clean = consistency_violations == 0 && equivalence.mismatches.empty();

    if (format == Format::json) {
        json echo{{"pq_max", pq_max},
                  {"d_abs_higgs", d_abs_higgs},
                  {"rank_sum", rank_sum},
                  {"d_abs_triple", d_abs_triple},
                  {"cap", cap.str()}};
        json result{{"mw_alpha_consistency",
                     json{{"checked", consistency_checked},
                          {"violations", consistency_violations},
                          {"samples", violation_samples},
                          {"provenance", "formula"}}},
                    {"wall_equivalence",
                     json{{"checked", equivalence.checked},
                          {"mismatches", equivalence.mismatches.size()},
                          {"samples", mismatch_samples},
                          {"provenance", "formula-vs-oracle"}}},
                    {"clean", clean}};
        emit_json(out, "check", echo, result);
    } else if (format == Format::csv) {
        emit_csv(out, {"sweep", "checked", "violations"},
                 {{"mw_alpha_consistency", std::to_string(consistency_checked),
                   std::to_string(consistency_violations)},
                  {"wall_equivalence", std::to_string(equivalence.checked),
                   std::to_string(equivalence.mismatches.size())}});
    } else {
        out << "mw_alpha_consistency checked " << consistency_checked << " violations "
            << consistency_violations << "\n";
        out << "wall_equivalence checked " << equivalence.checked << " mismatches "
            << equivalence.mismatches.size() << "\n";
        out << (clean ? "clean" : "VIOLATIONS FOUND") << "\n";
    }
    return clean ? 0 : 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants, stability walls and chamber decompositions for "
                 "holomorphic triples and U(p,q) bundle data"};
    app.require_subcommand(1);

    int exit_code = 0;

    // census
    auto* census_cmd = app.add_subcommand("census", "Allowed (d_V, d_W) pairs in a window");
    CommonFlags census_common;
    int c_p = 0, c_q = 0, c_genus = 0;
    std::string c_dv, c_dw;
    census_cmd->add_option("--p", c_p)->required();
    census_cmd->add_option("--q", c_q)->required();
    census_cmd->add_option("--genus", c_genus)->required();
    census_cmd->add_option("--dv", c_dv, "d_V value or lo:hi range")->required();
    census_cmd->add_option("--dw", c_dw, "d_W value or lo:hi range")->required();
    census_cmd->add_option("--format", census_common.format);
    census_cmd->add_flag("--seedless", census_common.seedless);
    census_cmd->callback(
        [&] { run_census(out, census_common, c_p, c_q, c_genus, c_dv, c_dw); });

    // translate
    auto* translate_cmd =
        app.add_subcommand("translate", "Higgs invariants <-> triple invariants");
    CommonFlags translate_common;
    std::optional<int> t_p, t_q, t_n1, t_n2;
    std::optional<long long> t_dv, t_dw, t_d1, t_d2;
    std::optional<std::string> t_side;
    int t_genus = 0;
    translate_cmd->add_option("--p", t_p);
    translate_cmd->add_option("--q", t_q);
    translate_cmd->add_option("--dv", t_dv);
    translate_cmd->add_option("--dw", t_dw);
    translate_cmd->add_option("--n1", t_n1);
    translate_cmd->add_option("--n2", t_n2);
    translate_cmd->add_option("--d1", t_d1);
    translate_cmd->add_option("--d2", t_d2);
    translate_cmd->add_option("--side", t_side, "czero or bzero");
    translate_cmd->add_option("--genus", t_genus)->required();
    translate_cmd->add_option("--format", translate_common.format);
    translate_cmd->add_flag("--seedless", translate_common.seedless);
    translate_cmd->callback([&] {
        run_translate(out, translate_common, t_p, t_q, t_dv, t_dw, t_n1, t_n2, t_d1, t_d2,
                      t_genus, t_side);
    });

    // walls
    auto* walls_cmd = app.add_subcommand("walls", "Critical values with witnesses");
    CommonFlags walls_common;
    int w_n1 = 0, w_n2 = 0;
    long long w_d1 = 0, w_d2 = 0;
    std::optional<std::string> w_cap;
    std::optional<int> w_genus;
    walls_cmd->add_option("--n1", w_n1)->required();
    walls_cmd->add_option("--n2", w_n2)->required();
    walls_cmd->add_option("--d1", w_d1)->required();
    walls_cmd->add_option("--d2", w_d2)->required();
    walls_cmd->add_option("--cap", w_cap, "alpha range cap (n1 = n2 only)");
    walls_cmd->add_option("--genus", w_genus);
    walls_cmd->add_option("--format", walls_common.format);
    walls_cmd->add_flag("--seedless", walls_common.seedless);
    walls_cmd->callback(
        [&] { run_walls(out, walls_common, w_n1, w_n2, w_d1, w_d2, w_cap, w_genus); });

    // chambers
    auto* chambers_cmd = app.add_subcommand("chambers", "Chamber decomposition of the alpha range");
    CommonFlags chambers_common;
    int ch_n1 = 0, ch_n2 = 0;
    long long ch_d1 = 0, ch_d2 = 0;
    std::optional<std::string> ch_cap, ch_alpha;
    std::optional<int> ch_genus;
    chambers_cmd->add_option("--n1", ch_n1)->required();
    chambers_cmd->add_option("--n2", ch_n2)->required();
    chambers_cmd->add_option("--d1", ch_d1)->required();
    chambers_cmd->add_option("--d2", ch_d2)->required();
    chambers_cmd->add_option("--cap", ch_cap, "alpha range cap (n1 = n2 only)");
    chambers_cmd->add_option("--genus", ch_genus, "also locate alpha = 2g-2");
    chambers_cmd->add_option("--alpha", ch_alpha, "locate this alpha value");
    chambers_cmd->add_option("--format", chambers_common.format);
    chambers_cmd->add_flag("--seedless", chambers_common.seedless);
    chambers_cmd->callback([&] {
        run_chambers(out, chambers_common, ch_n1, ch_n2, ch_d1, ch_d2, ch_cap, ch_genus, ch_alpha);
    });

    // chi
    auto* chi_cmd = app.add_subcommand("chi", "Extension-complex Euler characteristics");
    CommonFlags chi_common;
    int x_n1 = 0, x_n2 = 0, x_genus = 0;
    long long x_d1 = 0, x_d2 = 0;
    std::optional<int> x_n1b, x_n2b;
    std::optional<long long> x_d1b, x_d2b;
    chi_cmd->add_option("--n1", x_n1)->required();
    chi_cmd->add_option("--n2", x_n2)->required();
    chi_cmd->add_option("--d1", x_d1)->required();
    chi_cmd->add_option("--d2", x_d2)->required();
    chi_cmd->add_option("--n1b", x_n1b, "second triple rank 1");
    chi_cmd->add_option("--n2b", x_n2b, "second triple rank 2");
    chi_cmd->add_option("--d1b", x_d1b, "second triple degree 1");
    chi_cmd->add_option("--d2b", x_d2b, "second triple degree 2");
    chi_cmd->add_option("--genus", x_genus)->required();
    chi_cmd->add_option("--format", chi_common.format);
    chi_cmd->add_flag("--seedless", chi_common.seedless);
    chi_cmd->callback([&] {
        run_chi(out, chi_common, x_n1, x_n2, x_d1, x_d2, x_n1b, x_n2b, x_d1b, x_d2b, x_genus);
    });

    // minima
    auto* minima_cmd = app.add_subcommand("minima", "Classify a Hodge chain");
    CommonFlags minima_common;
    std::string m_ranks, m_degrees, m_sides;
    int m_genus = 0;
    minima_cmd->add_option("--ranks", m_ranks, "comma-separated ranks")->required();
    minima_cmd->add_option("--degrees", m_degrees, "comma-separated degrees (default zeros)");
    minima_cmd->add_option("--sides", m_sides, "comma-separated V/W pattern")->required();
    minima_cmd->add_option("--genus", m_genus)->required();
    minima_cmd->add_option("--format", minima_common.format);
    minima_cmd->add_flag("--seedless", minima_common.seedless);
    minima_cmd->callback(
        [&] { run_minima(out, minima_common, m_ranks, m_degrees, m_sides, m_genus); });

    // check
    auto* check_cmd = app.add_subcommand("check", "Formula-vs-oracle and MW/alpha sweeps");
    CommonFlags check_common;
    int k_pq_max = 4, k_rank_sum = 5;
    long long k_d_abs_higgs = 10, k_d_abs_triple = 6;
    std::string k_cap = "10";
    bool k_serial = false;
    check_cmd->add_option("--pq-max", k_pq_max);
    check_cmd->add_option("--d-abs-higgs", k_d_abs_higgs);
    check_cmd->add_option("--rank-sum", k_rank_sum);
    check_cmd->add_option("--d-abs-triple", k_d_abs_triple);
    check_cmd->add_option("--cap", k_cap);
    check_cmd->add_flag("--serial", k_serial, "use the serial reference kernels");
    check_cmd->add_option("--format", check_common.format);
    check_cmd->add_flag("--seedless", check_common.seedless);
    check_cmd->callback([&] {
        exit_code = run_check(out, check_common, k_pq_max, k_d_abs_higgs, k_rank_sum,
                              k_d_abs_triple, k_cap, k_serial);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace trimod
