#include "snfy/json_io.hpp"

#include <stdexcept>

namespace snfy {

Json json_of(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Json json_of(const Partition& p) {
    Json arr = Json::array();
    for (part_t v : p.parts()) arr.push_back(v);
    return arr;
}

Json json_of(const PolyZx& p) {
    Json arr = Json::array();
    for (const mpz_class& c : p.coeffs()) arr.push_back(json_of(c));
    return arr;
}

Json json_of(const PolyMatrix& m) {
    Json out = Json::object();
    out["dim"] = m.dim();
    if (!m.row_labels().empty()) {
        out["n"] = m.row_labels().front().n();
        Json order = Json::array();
        for (const Partition& p : m.row_labels()) order.push_back(json_of(p));
        out["order"] = order;
    }
    Json rows = Json::array();
    for (int r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(json_of(m.at(r, c)));
        rows.push_back(row);
    }
    out["entries"] = rows;
    return out;
}

namespace {

const char* kind_name(ElementaryOp::Kind k) {
    switch (k) {
        case ElementaryOp::Kind::AddMultipleRow: return "add_row";
        case ElementaryOp::Kind::AddMultipleCol: return "add_col";
        case ElementaryOp::Kind::SwapRowsSigned: return "swap_rows";
        case ElementaryOp::Kind::SwapColsSigned: return "swap_cols";
        case ElementaryOp::Kind::NegatePairRow: return "negate_rows";
        case ElementaryOp::Kind::NegatePairCol: return "negate_cols";
    }
    throw std::logic_error("unknown op kind");
}

}  // namespace

Json json_of(const ElementaryOp& op) {
    Json out = Json::object();
    out["kind"] = kind_name(op.kind);
    out["a"] = op.a;
    out["b"] = op.b;
    if (op.kind == ElementaryOp::Kind::AddMultipleRow ||
        op.kind == ElementaryOp::Kind::AddMultipleCol)
        out["mult"] = json_of(op.mult);
    return out;
}

Json json_of(const Transcript& t) {
    Json out = Json::object();
    Json rows = Json::array();
    for (const ElementaryOp& op : t.row_ops) rows.push_back(json_of(op));
    Json cols = Json::array();
    for (const ElementaryOp& op : t.col_ops) cols.push_back(json_of(op));
    out["row_ops"] = rows;
    out["col_ops"] = cols;
    return out;
}

Json json_of(const SnfCertificate& cert) {
    Json input = Json::object();
    input["n"] = cert.input_spec.n;
    input["k"] = cert.input_spec.k;
    input["basis"] = cert.input_spec.basis == Basis::HStringOrder ? "h" : "schur";
    Json fs = Json::array();
    for (const PolyZx& f : cert.input_spec.substituted_fs) fs.push_back(json_of(f));
    input["fs"] = fs;

    Json out = Json::object();
    out["input"] = input;
    Json diag = Json::array();
    for (int i = 0; i < cert.D.dim(); ++i) diag.push_back(json_of(cert.D.at(i, i)));
    out["diagonal"] = diag;
    out["D"] = json_of(cert.D);
    out["P"] = json_of(cert.P);
    out["Q"] = json_of(cert.Q);
    out["transcript"] = json_of(cert.transcript);
    out["verified"] = cert.verified;
    return out;
}

Json json_of(const SpecializeReport& rep) {
    Json out = Json::object();
    out["n"] = rep.n;
    out["k"] = rep.k;
    out["c"] = json_of(rep.c);
    Json lhs = Json::array();
    for (const mpz_class& v : rep.lhs) lhs.push_back(json_of(v));
    Json rhs = Json::array();
    for (const mpz_class& v : rep.rhs) rhs.push_back(json_of(v));
    out["lhs"] = lhs;
    out["rhs"] = rhs;
    out["match"] = rep.match;
    return out;
}

Json strings_report_json(int n) {
    StringDecomposition dec = string_decomposition(n);
    ShapeLambdaN shape = shape_lambda_n(n);
    Json out = Json::object();
    out["n"] = n;
    Json strings = Json::array();
    for (const FullString& s : dec.strings) {
        Json elems = Json::array();
        for (const Partition& p : s.elements) elems.push_back(json_of(p));
        strings.push_back(elems);
    }
    out["strings"] = strings;
    Json cards = Json::array();
    for (int c : dec.cardinalities()) cards.push_back(c);
    out["cardinalities"] = cards;
    out["shape"] = json_of(shape.shape);
    out["conjugate"] = json_of(shape.conjugate);
    return out;
}

Json conjecture_report_json(const ConjectureDiagonal& predicted, const DivisorLadder& ladder) {
    Json out = Json::object();
    out["n"] = predicted.n;
    out["k"] = predicted.k;
    Json entries = Json::array();
    for (const PolyZx& e : predicted.entries) entries.push_back(json_of(e));
    out["predicted"] = entries;

    // factor lists alongside the expanded coefficients: peel j consumed the
    // distinct values of the state before it and filled the entry j from the
    // back, one linear factor x + k(a+1) per distinct value
    std::vector<std::string> factored(predicted.entries.size(), "1");
    const std::vector<long long>* state = &predicted.initial_multiset;
    size_t pos = predicted.entries.size();
    for (size_t j = 0; j < predicted.peel_trace.size(); ++j) {
        std::string s;
        for (size_t i = 0; i < state->size(); ++i) {
            if (i > 0 && (*state)[i] == (*state)[i - 1]) continue;
            long root = static_cast<long>(predicted.k) * (static_cast<long>((*state)[i]) + 1);
            s += "(" + PolyZx::linear(root).to_string() + ")";
        }
        factored[--pos] = s;
        state = &predicted.peel_trace[j];
    }
    Json fact = Json::array();
    for (const std::string& s : factored) fact.push_back(s);
    out["predicted_factored"] = fact;

    Json multiset = Json::array();
    for (long long v : predicted.initial_multiset) multiset.push_back(v);
    out["initial_multiset"] = multiset;
    Json peels = Json::array();
    for (const auto& state : predicted.peel_trace) {
        Json st = Json::array();
        for (long long v : state) st.push_back(v);
        peels.push_back(st);
    }
    out["peel_trace"] = peels;

    Json levels = Json::array();
    for (const LadderLevel& lv : ladder.levels) {
        Json l = Json::object();
        l["order"] = lv.order;
        l["gcd"] = json_of(lv.gcd);
        l["exhaustive"] = lv.exhaustive;
        l["minors_processed"] = lv.minors_processed;
        if (ladder.has_target) {
            l["matches_target"] = lv.matches_target;
            l["consistent_with_target"] = lv.consistent_with_target;
        }
        levels.push_back(l);
    }
    out["ladder"] = levels;
    out["verdict"] = to_string(ladder.verdict());
    return out;
}

}  // namespace snfy
