#include "asai/packet_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "asai/archimedean.hpp"
#include "asai/valuation.hpp"
#include "asai/weights.hpp"

namespace asai {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty())
            out += "; ";
        out += part;
    }
    return out;
}

} // namespace

PacketParseError::PacketParseError(std::vector<std::string> diags)
    : std::runtime_error("packet error: " + join(diags)), diagnostics(std::move(diags)) {}

// ---------------------------------------------------------------------------
// polynomial expressions

namespace {

struct PolyLexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char ch) {
        if (peek() != ch)
            return false;
        ++pos;
        return true;
    }
    std::string number() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
        }
        return std::string(text.substr(start, pos - start));
    }
    std::string identifier() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

MPoly parse_factor(PolyLexer& lex, const VarTableRef& table) {
    char ch = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(ch)))
        return MPoly::constant(table, parse_rational(lex.number()));
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string name = lex.identifier();
        MPoly var = MPoly::variable(table, name);
        if (lex.accept('^')) {
            std::string exp = lex.number();
            if (exp.empty() || exp.find('/') != std::string::npos)
                throw std::invalid_argument("malformed exponent after '" + name + "'");
            return var.pow(std::stol(exp));
        }
        return var;
    }
    throw std::invalid_argument("unexpected character '" + std::string(1, ch) +
                                "' in polynomial");
}

MPoly parse_term(PolyLexer& lex, const VarTableRef& table) {
    MPoly result = parse_factor(lex, table);
    while (lex.accept('*'))
        result *= parse_factor(lex, table);
    return result;
}

} // namespace

MPoly parse_mpoly(std::string_view text, const VarTableRef& table) {
    if (!table)
        throw std::invalid_argument("symbolic value '" + std::string(text) +
                                    "' without a declared symbol table");
    PolyLexer lex{text};
    bool negate = lex.accept('-');
    MPoly result = parse_term(lex, table);
    if (negate)
        result = -result;
    while (!lex.eof()) {
        if (lex.accept('+'))
            result += parse_term(lex, table);
        else if (lex.accept('-'))
            result -= parse_term(lex, table);
        else
            throw std::invalid_argument("trailing junk in polynomial '" + std::string(text) +
                                        "'");
    }
    return result;
}

Scalar parse_scalar(std::string_view text, const VarTableRef& table) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos)
        throw std::invalid_argument("empty scalar");
    std::string_view body = text.substr(first);
    bool plain_rational = true;
    for (char ch : body)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' ||
              ch == ' '))
            plain_rational = false;
    if (plain_rational) {
        std::string trimmed(body);
        while (!trimmed.empty() && trimmed.back() == ' ')
            trimmed.pop_back();
        return Scalar(parse_rational(trimmed));
    }
    return Scalar(parse_mpoly(body, table));
}

// ---------------------------------------------------------------------------
// packets

namespace {

struct PacketReader {
    const Json& j;
    std::vector<std::string> diags;

    void fail(const std::string& where, const std::string& what) {
        diags.push_back(where + ": " + what);
    }

    template <typename T>
    std::optional<T> want(const Json& node, const std::string& where, const char* key) {
        if (!node.contains(key)) {
            fail(where, std::string("missing field '") + key + "'");
            return std::nullopt;
        }
        try {
            return node.at(key).get<T>();
        } catch (const Json::exception& e) {
            fail(where + "." + key, e.what());
            return std::nullopt;
        }
    }
};

Scalar read_scalar(PacketReader& reader, const Json& node, const std::string& where,
                   const char* key, const VarTableRef& table) {
    auto text = reader.want<std::string>(node, where, key);
    if (!text)
        return Scalar(0);
    try {
        return parse_scalar(*text, table);
    } catch (const std::exception& e) {
        reader.fail(where + "." + key, e.what());
        return Scalar(0);
    }
}

} // namespace

HilbertEigenPacket parse_packet_json(const Json& j) {
    PacketReader reader{j, {}};
    HilbertEigenPacket pkt;

    VarTableRef table;
    if (auto mode = reader.want<std::string>(j, "packet", "mode")) {
        if (*mode == "symbolic") {
            if (auto symbols = reader.want<std::vector<std::string>>(j, "packet", "symbols")) {
                try {
                    table = make_vars(*symbols);
                } catch (const std::exception& e) {
                    reader.fail("packet.symbols", e.what());
                }
            }
        } else if (*mode != "numeric") {
            reader.fail("packet.mode", "expected 'numeric' or 'symbolic'");
        }
    }
    pkt.vars = table;

    if (j.contains("field")) {
        if (auto d = reader.want<long>(j.at("field"), "field", "d")) {
            try {
                pkt.field = make_quad_field(*d);
            } catch (const std::exception& e) {
                reader.fail("field.d", e.what());
            }
        }
    } else {
        reader.fail("packet", "missing field 'field'");
    }

    if (j.contains("weight")) {
        const Json& w = j.at("weight");
        auto n = reader.want<std::vector<long>>(w, "weight", "n");
        auto v = reader.want<std::vector<long>>(w, "weight", "v");
        if (n && v) {
            if (n->size() != 2 || v->size() != 2) {
                reader.fail("weight", "n and v must each have two entries");
            } else {
                pkt.weight = {(*n)[0], (*n)[1], (*v)[0], (*v)[1]};
            }
        }
    } else {
        reader.fail("packet", "missing field 'weight'");
    }

    auto p = reader.want<long>(j, "packet", "p");
    if (p)
        pkt.p = *p;

    if (pkt.field.d > 1 && !reader.diags.empty()) {
        // keep collecting below anyway
    }

    if (j.contains("hecke")) {
        if (!j.at("hecke").is_array()) {
            reader.fail("hecke", "expected an array");
        } else {
            std::size_t idx = 0;
            for (const Json& entry : j.at("hecke")) {
                std::string where = "hecke[" + std::to_string(idx++) + "]";
                auto ell = reader.want<long>(entry, where, "prime");
                auto type = reader.want<std::string>(entry, where, "type");
                if (!ell || !type)
                    continue;
                if (*type != "split" && *type != "inert") {
                    reader.fail(where + ".type", "expected 'split' or 'inert'");
                    continue;
                }
                if (pkt.field.d <= 1 || !is_prime(*ell)) {
                    reader.fail(where, "bad residue prime");
                    continue;
                }
                SplittingType actual = splitting_type(pkt.field, *ell);
                if (actual == SplittingType::Ramified) {
                    reader.fail(where, "ramified prime " + std::to_string(*ell) +
                                           " carries no Hecke data");
                    continue;
                }
                if ((*type == "split") != (actual == SplittingType::Split)) {
                    reader.fail(where + ".type", "prime " + std::to_string(*ell) + " is " +
                                                     splitting_str(actual) + " in K");
                    continue;
                }
                auto read_local = [&](const char* key, IdealSlot slot) {
                    if (!entry.contains(key)) {
                        reader.fail(where, std::string("missing field '") + key + "'");
                        return;
                    }
                    PrimeIdealLabel label{*ell, slot};
                    SatakeLocal loc;
                    loc.label = label;
                    loc.norm = label_norm(pkt.field, label);
                    loc.a = read_scalar(reader, entry.at(key), where + "." + key, "a", table);
                    loc.s = read_scalar(reader, entry.at(key), where + "." + key, "s", table);
                    pkt.locals[label] = std::move(loc);
                };
                if (*type == "split") {
                    read_local("first", IdealSlot::First);
                    read_local("second", IdealSlot::Second);
                } else {
                    read_local("whole", IdealSlot::Whole);
                }
            }
        }
    }

    if (j.contains("refinement")) {
        const Json& r = j.at("refinement");
        bool split_fields = r.contains("alpha_p") || r.contains("alpha_pc");
        bool inert_fields = r.contains("alpha");
        if (split_fields && inert_fields) {
            reader.fail("refinement", "mixes split fields (alpha_p/alpha_pc) with inert ones");
        } else if (split_fields) {
            pkt.refinement.regime = PRegime::SplitAtP;
            pkt.refinement.alpha1 = read_scalar(reader, r, "refinement", "alpha_p", table);
            pkt.refinement.alpha2 = read_scalar(reader, r, "refinement", "alpha_pc", table);
            if (r.contains("beta_p"))
                pkt.refinement.beta1 = read_scalar(reader, r, "refinement", "beta_p", table);
            if (r.contains("beta_pc"))
                pkt.refinement.beta2 = read_scalar(reader, r, "refinement", "beta_pc", table);
        } else if (inert_fields) {
            pkt.refinement.regime = PRegime::InertAtP;
            pkt.refinement.alpha1 = read_scalar(reader, r, "refinement", "alpha", table);
            if (r.contains("beta"))
                pkt.refinement.beta1 = read_scalar(reader, r, "refinement", "beta", table);
        } else {
            reader.fail("refinement", "needs alpha_p/alpha_pc (split) or alpha (inert)");
        }
    } else {
        reader.fail("packet", "missing field 'refinement'");
    }

    if (j.contains("regime")) {
        auto declared = reader.want<std::string>(j, "packet", "regime");
        if (declared && *declared != regime_str(pkt.refinement.regime))
            reader.fail("regime", "declared '" + *declared + "' but refinement data is " +
                                      regime_str(pkt.refinement.regime));
    }

    if (j.contains("valuations")) {
        if (!j.at("valuations").is_object()) {
            reader.fail("valuations", "expected an object");
        } else {
            for (const auto& [key, value] : j.at("valuations").items()) {
                if (!table || !table->contains(key)) {
                    reader.fail("valuations." + key, "not a declared symbol");
                    continue;
                }
                try {
                    pkt.refinement.declared_valuations[key] =
                        parse_rational(value.get<std::string>());
                } catch (const std::exception& e) {
                    reader.fail("valuations." + key, e.what());
                }
            }
        }
    }

    if (!reader.diags.empty())
        throw PacketParseError(std::move(reader.diags));

    auto violations = validate_packet(pkt);
    if (!violations.empty())
        throw PacketParseError(std::move(violations));
    return pkt;
}

HilbertEigenPacket parse_packet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw PacketParseError({"cannot open '" + path + "'"});
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw PacketParseError({std::string("JSON syntax: ") + e.what()});
    }
    return parse_packet_json(j);
}

Json render_packet(const HilbertEigenPacket& pkt) {
    Json j;
    j["field"] = Json{{"d", pkt.field.d}};
    j["weight"] = Json{{"n", {pkt.weight.n1, pkt.weight.n2}},
                       {"v", {pkt.weight.v1, pkt.weight.v2}}};
    j["p"] = pkt.p;
    j["regime"] = regime_str(pkt.refinement.regime);
    j["mode"] = pkt.symbolic() ? "symbolic" : "numeric";
    if (pkt.symbolic())
        j["symbols"] = pkt.vars->names();

    Json hecke = Json::array();
    std::map<long, std::vector<const SatakeLocal*>> grouped;
    for (const auto& [label, loc] : pkt.locals)
        grouped[label.ell].push_back(&loc);
    for (const auto& [ell, locs] : grouped) {
        Json entry;
        entry["prime"] = ell;
        if (locs.size() == 1 && locs[0]->label.slot == IdealSlot::Whole) {
            entry["type"] = "inert";
            entry["whole"] = Json{{"a", locs[0]->a.str()}, {"s", locs[0]->s.str()}};
        } else {
            entry["type"] = "split";
            for (const SatakeLocal* loc : locs) {
                const char* key = loc->label.slot == IdealSlot::First ? "first" : "second";
                entry[key] = Json{{"a", loc->a.str()}, {"s", loc->s.str()}};
            }
        }
        hecke.push_back(std::move(entry));
    }
    j["hecke"] = std::move(hecke);

    Json refinement;
    if (pkt.refinement.regime == PRegime::SplitAtP) {
        refinement["alpha_p"] = pkt.refinement.alpha1.str();
        refinement["alpha_pc"] = pkt.refinement.alpha2.str();
        if (pkt.refinement.beta1)
            refinement["beta_p"] = pkt.refinement.beta1->str();
        if (pkt.refinement.beta2)
            refinement["beta_pc"] = pkt.refinement.beta2->str();
    } else {
        refinement["alpha"] = pkt.refinement.alpha1.str();
        if (pkt.refinement.beta1)
            refinement["beta"] = pkt.refinement.beta1->str();
    }
    j["refinement"] = std::move(refinement);

    if (!pkt.refinement.declared_valuations.empty()) {
        Json vals;
        for (const auto& [name, value] : pkt.refinement.declared_valuations)
            vals[name] = rational_str(value);
        j["valuations"] = std::move(vals);
    }
    return j;
}

bool packets_equal(const HilbertEigenPacket& a, const HilbertEigenPacket& b) {
    if (a.field.d != b.field.d || a.p != b.p)
        return false;
    if (a.weight.n1 != b.weight.n1 || a.weight.n2 != b.weight.n2 ||
        a.weight.v1 != b.weight.v1 || a.weight.v2 != b.weight.v2)
        return false;
    if (a.symbolic() != b.symbolic())
        return false;
    if (a.symbolic() && !(*a.vars == *b.vars))
        return false;
    if (a.locals.size() != b.locals.size())
        return false;
    for (const auto& [label, loc] : a.locals) {
        auto it = b.locals.find(label);
        if (it == b.locals.end() || !(loc.a == it->second.a) || !(loc.s == it->second.s))
            return false;
    }
    const RefinementData& ra = a.refinement;
    const RefinementData& rb = b.refinement;
    if (ra.regime != rb.regime || !(ra.alpha1 == rb.alpha1))
        return false;
    if (ra.regime == PRegime::SplitAtP && !(ra.alpha2 == rb.alpha2))
        return false;
    if (ra.beta1.has_value() != rb.beta1.has_value() ||
        (ra.beta1 && !(*ra.beta1 == *rb.beta1)))
        return false;
    if (ra.beta2.has_value() != rb.beta2.has_value() ||
        (ra.beta2 && !(*ra.beta2 == *rb.beta2)))
        return false;
    return ra.declared_valuations == rb.declared_valuations;
}

// ---------------------------------------------------------------------------
// reports

namespace {

Json scalar_list(const std::array<Scalar, 4>& values) {
    Json out = Json::array();
    for (const Scalar& v : values)
        out.push_back(v.str());
    return out;
}

} // namespace

Json render_report(const HilbertEigenPacket& pkt, TransferSign sign) {
    GL4EigenPacket out = transfer_eigenpacket(pkt, sign);
    const PRegime regime = pkt.refinement.regime;

    Json j;
    j["report"] = "asai-transfer";
    j["sign"] = sign_str(sign);
    j["field"] = Json{{"d", pkt.field.d}, {"disc", pkt.field.discriminant}};
    j["weight"] = Json{{"n", {pkt.weight.n1, pkt.weight.n2}},
                       {"v", {pkt.weight.v1, pkt.weight.v2}},
                       {"m", pkt.weight.m()}};
    j["p"] = pkt.p;
    j["regime"] = regime_str(regime);
    if (pkt.symbolic())
        j["symbols"] = pkt.vars->names();

    auto report = purity_dominance_check(out.weight);
    j["gl4_weight"] = Json{{"mu", {out.weight.mu1, out.weight.mu2, out.weight.mu3, out.weight.mu4}},
                           {"w", out.weight.w},
                           {"pure", report.pure},
                           {"dominant", report.dominant},
                           {"regular", report.regular}};

    Json locals = Json::array();
    for (const auto& [ell, loc] : out.locals) {
        Json entry;
        entry["ell"] = ell;
        entry["type"] = splitting_str(splitting_type(pkt.field, ell));
        entry["T"] = scalar_list(loc.t);
        UniPoly cp = asai_charpoly_local(loc);
        Json coeffs = Json::array(); // X^4 down to X^0
        for (int i = 4; i >= 0; --i)
            coeffs.push_back(cp.coeff(i).str());
        entry["charpoly"] = std::move(coeffs);
        locals.push_back(std::move(entry));
    }
    j["locals"] = std::move(locals);

    j["p_part"] = Json{{"U", scalar_list(out.ppart.u)},
                       {"controlling", out.ppart.controlling.str()}};

    RefinementCharacter chi = regime == PRegime::SplitAtP
                                  ? refinement_split(pkt.refinement, pkt.p, pkt.weight.m())
                                  : refinement_inert(pkt.refinement, pkt.p, pkt.weight.m(), sign);
    j["refinement"] = Json{{"u", scalar_list(chi.u)}};

    Rational closed = small_slope_closed_form(pkt.weight, regime);
    Rational brute = weyl_slope_bound_bruteforce(out.weight, slope_context(regime));
    Json slope = Json{{"closed", rational_str(closed)}, {"bruteforce", rational_str(brute)}};
    slope["agree"] = closed == brute;
    j["slope"] = std::move(slope);

    try {
        auto cls = classicality_check(pkt);
        j["classicality"] = Json{{"valuation", rational_str(cls.valuation)},
                                 {"threshold", rational_str(cls.threshold)},
                                 {"classical", cls.classical}};
    } catch (const std::invalid_argument& e) {
        j["classicality"] = Json{{"available", false}, {"reason", e.what()}};
    }

    j["classical_weight"] = classical_weight_membership(pkt.weight, regime);
    j["star_eigenvalue"] = star_eigenvalue(pkt, sign).str();

    Json hodge = Json::array();
    for (const HodgeType& h : hodge_types_asai(pkt.weight))
        hodge.push_back({h.p, h.q});
    Json params = Json::array();
    for (const auto& [u, v] : asai_parameter(pkt.weight, true))
        params.push_back({rational_str(u), rational_str(v)});
    GL4Weight via_inf = mu_from_infinity(pkt.weight);
    j["archimedean"] =
        Json{{"hodge_types", std::move(hodge)},
             {"parameter_normalized", std::move(params)},
             {"mu_from_infinity", {via_inf.mu1, via_inf.mu2, via_inf.mu3, via_inf.mu4}},
             {"matches_weight_map", via_inf.mu() == out.weight.mu() && via_inf.w == out.weight.w}};
    return j;
}

GL4EigenPacket parse_report_json(const Json& j) {
    PacketReader reader{j, {}};
    GL4EigenPacket out;

    VarTableRef table;
    if (j.contains("symbols")) {
        try {
            table = make_vars(j.at("symbols").get<std::vector<std::string>>());
        } catch (const std::exception& e) {
            reader.fail("symbols", e.what());
        }
    }

    auto sign = reader.want<std::string>(j, "report", "sign");
    if (sign)
        out.sign = *sign == "minus" ? TransferSign::Minus : TransferSign::Plus;
    auto regime = reader.want<std::string>(j, "report", "regime");
    if (regime)
        out.ppart.regime = *regime == "inert" ? PRegime::InertAtP : PRegime::SplitAtP;

    if (j.contains("gl4_weight")) {
        auto mu = reader.want<std::vector<long>>(j.at("gl4_weight"), "gl4_weight", "mu");
        auto w = reader.want<long>(j.at("gl4_weight"), "gl4_weight", "w");
        if (mu && w && mu->size() == 4)
            out.weight = GL4Weight{(*mu)[0], (*mu)[1], (*mu)[2], (*mu)[3], *w};
    }

    auto read_four = [&](const Json& node, const std::string& where, std::array<Scalar, 4>& dst) {
        auto texts = reader.want<std::vector<std::string>>(node, where, where == "p_part" ? "U" : "T");
        if (!texts || texts->size() != 4) {
            reader.fail(where, "expected four entries");
            return;
        }
        for (int i = 0; i < 4; ++i) {
            try {
                dst[i] = parse_scalar((*texts)[i], table);
            } catch (const std::exception& e) {
                reader.fail(where, e.what());
            }
        }
    };

    if (j.contains("locals") && j.at("locals").is_array()) {
        for (const Json& entry : j.at("locals")) {
            auto ell = reader.want<long>(entry, "locals", "ell");
            if (!ell)
                continue;
            GL4Local loc;
            loc.ell = *ell;
            read_four(entry, "locals", loc.t);
            out.locals.emplace(*ell, std::move(loc));
        }
    } else {
        reader.fail("report", "missing field 'locals'");
    }

    if (j.contains("p_part")) {
        read_four(j.at("p_part"), "p_part", out.ppart.u);
        auto controlling = reader.want<std::string>(j.at("p_part"), "p_part", "controlling");
        if (controlling) {
            try {
                out.ppart.controlling = parse_scalar(*controlling, table);
            } catch (const std::exception& e) {
                reader.fail("p_part.controlling", e.what());
            }
        }
    } else {
        reader.fail("report", "missing field 'p_part'");
    }

    if (!reader.diags.empty())
        throw PacketParseError(std::move(reader.diags));
    return out;
}

GL4EigenPacket parse_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw PacketParseError({"cannot open '" + path + "'"});
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw PacketParseError({std::string("JSON syntax: ") + e.what()});
    }
    return parse_report_json(j);
}

} // namespace asai
