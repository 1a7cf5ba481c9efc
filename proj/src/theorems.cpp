#include "proxring/theorems.hpp"

#include <sstream>

namespace proxring {

namespace {

std::string label(const SpacePtr& space, ElementIndex i) {
    return space->element(i).label;
}

ResolvedWitness resolve_witness(const WitnessTuple& w, const SpacePtr& space) {
    ResolvedWitness out;
    for (auto i : w.elems) out.labels.push_back(label(space, i));
    out.note = w.note;
    return out;
}

void attach(TheoremReport& rep, std::string name, CheckReport report, SpacePtr space) {
    rep.details.push_back({std::move(name), std::move(report), std::move(space)});
}

/// Copies the witnesses of failing required axioms into the report.
void collect_witnesses(TheoremReport& rep, const CheckReport& report, const SpacePtr& space) {
    for (const auto& ax : report.axioms) {
        if (!ax.required || ax.holds) continue;
        for (const auto& w : ax.witnesses) rep.witnesses.push_back(resolve_witness(w, space));
    }
}

void append_note(TheoremReport& rep, const std::string& note) {
    if (!rep.notes.empty()) rep.notes += "; ";
    rep.notes += note;
}

bool demotable(ErrorCode code) {
    return code == ErrorCode::precondition || code == ErrorCode::missing_zero ||
           code == ErrorCode::missing_unity || code == ErrorCode::degenerate_input;
}

/// Runs one side of an entry. Definition-level failures demote to false;
/// structural errors leave the side unset and mark the entry not
/// applicable through the note. Budget errors propagate. A degenerate
/// carrier (e.g. the zero ring under a domain check) falsifies a
/// hypothesis but leaves a conclusion not applicable: the definition
/// does not speak about such carriers.
std::optional<bool> guarded(TheoremReport& rep, const char* side,
                            const std::function<bool()>& fn) {
    const bool in_hypothesis = std::string_view(side) == "hypothesis";
    try {
        return fn();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::budget) throw;
        if (e.code() == ErrorCode::degenerate_input && !in_hypothesis) {
            append_note(rep, std::string(side) + " not evaluable on a degenerate carrier: " +
                                 e.what());
            return std::nullopt;
        }
        if (demotable(e.code())) {
            append_note(rep, std::string(side) + " fails definitionally: " + e.what());
            return false;
        }
        append_note(rep, std::string(side) + " not evaluable: " + e.what());
        return std::nullopt;
    }
}

CheckReport audit_report(const CosetSpace& q) {
    CheckReport report;
    auto fill = [&](const char* tag, const AuditResult& a, bool required) {
        auto& ax = report.add_axiom(tag, required);
        ax.holds = a.ok;
        ax.witnesses = a.witnesses;
        if (!required) ax.note = "informational: scope includes representatives outside R";
    };
    fill("audit.add.R", q.add_audit_r, true);
    fill("audit.mul.R", q.mul_audit_r, true);
    fill("audit.add.X", q.add_audit_x, false);
    fill("audit.mul.X", q.mul_audit_x, false);
    report.finalize();
    return report;
}

/// Quotient used by the theorem entries. Cosets are identified by their
/// feature sets: the quotient arguments equate cosets that the probe
/// cannot distinguish, which is the reading under which the quotient
/// results reproduce the worked 16-pixel example.
CosetSpace theorem_quotient(TheoremReport& rep, const RingContext& ctx, const Subset& ideal) {
    CosetSpace q = quotient(ctx, ideal, CosetRho::feature_equality);
    attach(rep, "quotient-audit", audit_report(q), ctx.space);
    if (!q.add_audit_r.ok || !q.mul_audit_r.ok)
        raise(ErrorCode::structure,
              "quotient operations depend on the representative choice within R");
    return q;
}

bool upper_groupoid_closed(const RingContext& ctx) {
    for (auto a : ctx.upper.members())
        for (auto b : ctx.upper.members()) {
            if (!ctx.upper.contains(ctx.add->apply(a, b))) return false;
            if (!ctx.upper.contains(ctx.mul->apply(a, b))) return false;
        }
    return true;
}

/// Enumerates non-empty proper subsets of R; returns false when some
/// approximately ideal among them fails the prime check.
bool all_proper_ideals_prime(TheoremReport& rep, const RingContext& ctx) {
    auto members = ctx.carrier.members();
    std::size_t k = members.size();
    for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << k); ++bits) {
        Subset candidate = Subset::empty(ctx.space);
        for (std::size_t i = 0; i < k; ++i)
            if (bits & (std::uint64_t{1} << i)) candidate = candidate.with(members[i]);
        CheckReport ideal_report = is_approx_ideal(candidate, ctx);
        if (!ideal_report.verdict) continue;
        CheckReport prime_report = is_approx_prime_ideal(candidate, ctx);
        if (!prime_report.verdict) {
            std::ostringstream os;
            os << "non-prime proper ideal {";
            for (const auto& l : candidate.labels()) os << " " << l;
            os << " }";
            append_note(rep, os.str());
            collect_witnesses(rep, prime_report, ctx.space);
            return false;
        }
    }
    return true;
}

void enum_guard(const TheoremBundle& b, const RingContext& ctx) {
    if (static_cast<int>(ctx.carrier.size()) > b.subset_enum_limit)
        raise(ErrorCode::budget,
              "carrier of " + std::to_string(ctx.carrier.size()) +
                  " elements exceeds the subset enumeration limit of " +
                  std::to_string(b.subset_enum_limit));
}

// ---------------------------------------------------------------------------
// Registry entries.

void run_t1(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto rr = is_approx_ring(ctx);
        attach(rep, "ring", rr, ctx.space);
        if (!rr.verdict) return false;
        auto ir = is_approx_ideal(*b.ideal, ctx);
        attach(rep, "ideal", ir, ctx.space);
        if (!ir.verdict) return false;
        auto pr = is_approx_prime_ideal(*b.ideal, ctx);
        attach(rep, "prime-ideal", pr, ctx.space);
        return pr.verdict;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        CosetSpace q = theorem_quotient(rep, ctx, *b.ideal);
        auto dr = is_approx_integral_domain(q.qctx);
        attach(rep, "quotient-integral-domain", dr, q.qspace);
        if (!dr.verdict) collect_witnesses(rep, dr, q.qspace);
        return dr.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t2(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    Subset complement = Subset::empty(ctx.space);
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto rr = is_approx_ring(ctx);
        attach(rep, "ring", rr, ctx.space);
        if (!rr.verdict) return false;
        auto ir = is_approx_ideal(*b.ideal, ctx);
        attach(rep, "ideal", ir, ctx.space);
        if (!ir.verdict) return false;
        auto pr = is_approx_prime_ideal(*b.ideal, ctx);
        attach(rep, "prime-ideal", pr, ctx.space);
        if (!pr.verdict) return false;
        complement = ctx.carrier.minus(upper_approx(*b.ideal));
        if (complement.empty()) {
            append_note(rep, "S = R minus Phi*I is empty");
            return false;
        }
        return true;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        auto mc = is_mult_closed(complement, ctx);
        attach(rep, "mult-closed", mc, ctx.space);
        if (!mc.verdict) collect_witnesses(rep, mc, ctx.space);
        return mc.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

// Shared by T3 and T4: hypothesis conditions for principal ideals.
std::optional<Subset> principal_hypothesis(TheoremReport& rep, const RingContext& ctx,
                                           ElementIndex p) {
    if (!commutative_on(ctx.carrier, *ctx.mul)) {
        append_note(rep, "context is not commutative");
        return std::nullopt;
    }
    if (!upper_groupoid_closed(ctx)) {
        append_note(rep, "(Phi*R, +) or (Phi*R, .) is not a groupoid");
        return std::nullopt;
    }
    if (!ctx.carrier.contains(p))
        raise(ErrorCode::containment, "designated element is not in R");
    if (ctx.one && is_approx_unit(p, ctx)) {
        append_note(rep, "p is an approximately unit");
        return std::nullopt;
    }
    auto principal = principal_ideal(p, ctx);
    Subset zero_set = Subset::empty(ctx.space);
    if (ctx.zero && ctx.carrier.contains(*ctx.zero)) zero_set = zero_set.with(*ctx.zero);
    if (principal.degenerate_empty || principal.members.is_subset_of(zero_set)) {
        append_note(rep, "(p) is not a non-zero set");
        return std::nullopt;
    }
    std::ostringstream os;
    os << "(p) = {";
    for (const auto& l : principal.members.labels()) os << " " << l;
    os << " }";
    append_note(rep, os.str());
    return principal.members;
}

void run_t3(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    std::optional<Subset> principal;
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto rr = is_approx_ring(ctx);
        attach(rep, "ring", rr, ctx.space);
        if (!rr.verdict) return false;
        principal = principal_hypothesis(rep, ctx, *b.element);
        return principal.has_value();
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        auto ir = is_approx_ideal(*principal, ctx);
        attach(rep, "principal-ideal", ir, ctx.space);
        if (!ir.verdict) collect_witnesses(rep, ir, ctx.space);
        return ir.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t4(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto dr = is_approx_integral_domain(ctx);
        attach(rep, "integral-domain", dr, ctx.space);
        if (!dr.verdict) return false;
        if (!ctx.one) {
            append_note(rep, "no unity identified in Phi*R");
            return false;
        }
        auto pp = is_principal_prime(*b.element, ctx);
        attach(rep, "principal-prime", pp, ctx.space);
        return pp.verdict;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        auto ir = is_approx_irreducible(*b.element, ctx);
        attach(rep, "irreducible", ir, ctx.space);
        if (!ir.verdict) collect_witnesses(rep, ir, ctx.space);
        return ir.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t5(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    enum_guard(b, ctx);
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto rr = is_approx_ring(ctx);
        attach(rep, "ring", rr, ctx.space);
        if (!rr.verdict) return false;
        if (!commutative_on(ctx.carrier, *ctx.mul)) {
            append_note(rep, "context is not commutative");
            return false;
        }
        return all_proper_ideals_prime(rep, ctx);
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        auto dr = is_approx_integral_domain(ctx);
        attach(rep, "integral-domain", dr, ctx.space);
        if (!dr.verdict) collect_witnesses(rep, dr, ctx.space);
        return dr.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t6(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    enum_guard(b, ctx);
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto dr = is_approx_integral_domain(ctx);
        attach(rep, "integral-domain", dr, ctx.space);
        if (!dr.verdict) return false;
        if (!ctx.one) {
            append_note(rep, "no unity identified in Phi*R");
            return false;
        }
        return all_proper_ideals_prime(rep, ctx);
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        auto fr = is_approx_field(ctx);
        attach(rep, "field", fr, ctx.space);
        if (!fr.verdict) collect_witnesses(rep, fr, ctx.space);
        return fr.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t7(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto rr = is_approx_ring(ctx);
        attach(rep, "ring", rr, ctx.space);
        if (!rr.verdict) return false;
        if (!commutative_on(ctx.carrier, *ctx.mul)) {
            append_note(rep, "context is not commutative");
            return false;
        }
        if (!ctx.one) {
            append_note(rep, "no unity identified in Phi*R");
            return false;
        }
        auto ia = is_approx_ideal(*b.ideal, ctx);
        attach(rep, "ideal-A", ia, ctx.space);
        auto ib = is_approx_ideal(*b.ideal2, ctx);
        attach(rep, "ideal-B", ib, ctx.space);
        return ia.verdict && ib.verdict;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        auto product = ideal_product(*b.ideal, *b.ideal2, ctx);
        std::ostringstream os;
        os << "AB = {";
        for (const auto& l : product.members.labels()) os << " " << l;
        os << " }, fixpoint in " << product.iterations << " iteration(s)";
        append_note(rep, os.str());
        auto ir = is_approx_ideal(product.members, ctx);
        attach(rep, "product-ideal", ir, ctx.space);
        if (!ir.verdict) collect_witnesses(rep, ir, ctx.space);
        return ir.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t8(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    Subset product_set = Subset::empty(ctx.space);
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto rr = is_approx_ring(ctx);
        attach(rep, "ring", rr, ctx.space);
        if (!rr.verdict) return false;
        auto ib = is_approx_ideal(*b.ideal2, ctx);
        attach(rep, "ideal-B", ib, ctx.space);
        auto ic = is_approx_ideal(*b.ideal3, ctx);
        attach(rep, "ideal-C", ic, ctx.space);
        if (!ib.verdict || !ic.verdict) return false;
        product_set = ideal_product(*b.ideal2, *b.ideal3, ctx).members;
        if (product_set.empty()) {
            append_note(rep, "A = BC is empty");
            return false;
        }
        auto ia = is_approx_ideal(product_set, ctx);
        attach(rep, "ideal-A", ia, ctx.space);
        if (!ia.verdict) return false;
        auto pa = is_approx_prime_ideal(product_set, ctx);
        attach(rep, "prime-A", pa, ctx.space);
        return pa.verdict;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        bool b_in = b.ideal2->is_subset_of(product_set);
        bool c_in = b.ideal3->is_subset_of(product_set);
        if (!b_in && !c_in) {
            for (auto x : b.ideal2->minus(product_set).members())
                rep.witnesses.push_back({{label(ctx.space, x)}, "element of B outside A"});
            for (auto x : b.ideal3->minus(product_set).members())
                rep.witnesses.push_back({{label(ctx.space, x)}, "element of C outside A"});
        }
        return b_in || c_in;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t9(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    bool prime = false, criterion = false;
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto rr = is_approx_ring(ctx);
        attach(rep, "ring", rr, ctx.space);
        if (!rr.verdict) return false;
        auto pr = is_approx_prime_ring(ctx);
        attach(rep, "prime-ring", pr, ctx.space);
        prime = pr.verdict;
        auto cr = elementwise_prime_criterion(ctx);
        attach(rep, "elementwise", cr, ctx.space);
        criterion = cr.verdict;
        return true;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        append_note(rep, std::string("prime-ring: ") + (prime ? "true" : "false") +
                             ", elementwise criterion: " + (criterion ? "true" : "false"));
        if (prime != criterion) {
            for (const auto& d : rep.details)
                if (d.name == (prime ? "elementwise" : "prime-ring"))
                    collect_witnesses(rep, d.report, d.space);
        }
        return prime == criterion;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t10a(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto rr = is_approx_ring(ctx);
        attach(rep, "ring", rr, ctx.space);
        if (!rr.verdict) return false;
        auto ir = is_approx_ideal(*b.ideal, ctx);
        attach(rep, "ideal", ir, ctx.space);
        if (!ir.verdict) return false;
        CosetSpace q = theorem_quotient(rep, ctx, *b.ideal);
        auto pr = is_approx_prime_ring(q.qctx);
        attach(rep, "quotient-prime-ring", pr, q.qspace);
        return pr.verdict;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        auto pr = is_approx_prime_ideal(*b.ideal, ctx);
        attach(rep, "prime-ideal", pr, ctx.space);
        if (!pr.verdict) collect_witnesses(rep, pr, ctx.space);
        return pr.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t10b(const TheoremBundle& b, TheoremReport& rep) {
    const auto& ctx = *b.ring;
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto rr = is_approx_ring(ctx);
        attach(rep, "ring", rr, ctx.space);
        if (!rr.verdict) return false;
        auto ir = is_approx_ideal(*b.ideal, ctx);
        attach(rep, "ideal", ir, ctx.space);
        if (!ir.verdict) return false;
        auto pr = is_approx_prime_ideal(*b.ideal, ctx);
        attach(rep, "prime-ideal", pr, ctx.space);
        return pr.verdict;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        CosetSpace q = theorem_quotient(rep, ctx, *b.ideal);
        auto pr = is_approx_prime_ring(q.qctx);
        attach(rep, "quotient-prime-ring", pr, q.qspace);
        if (!pr.verdict) collect_witnesses(rep, pr, q.qspace);
        return pr.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t11(const TheoremBundle& b, TheoremReport& rep) {
    std::optional<ProductContext> product;
    auto hyp = guarded(rep, "hypothesis", [&] {
        auto lr = is_approx_ring(*b.left);
        attach(rep, "left-ring", lr, b.left->space);
        auto rr = is_approx_ring(*b.right);
        attach(rep, "right-ring", rr, b.right->space);
        if (!lr.verdict || !rr.verdict) return false;
        if (!upper_groupoid_closed(*b.left) || !upper_groupoid_closed(*b.right)) {
            append_note(rep, "an upper approximation is not closed under the operations");
            return false;
        }
        product = direct_product(*b.left, *b.right);
        if (!product->phi_product_law_ok) {
            append_note(rep, "Phi*(R1 x R2) differs from Phi*R1 x Phi*R2");
            return false;
        }
        return true;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        auto pr = is_approx_ring(product->ctx);
        attach(rep, "product-ring", pr, product->space);
        if (!pr.verdict) collect_witnesses(rep, pr, product->space);
        return pr.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

// Shared by T12/T13: the conclusion asserts a negative, so definitional
// failure of the inner check makes the negative conclusion hold.
void run_never(const TheoremBundle& b, TheoremReport& rep, bool domain_variant) {
    std::optional<ProductContext> product;
    auto hyp = guarded(rep, "hypothesis", [&] {
        product = direct_product(*b.left, *b.right);
        attach(rep, "left-ring", product->left_ring, b.left->space);
        attach(rep, "right-ring", product->right_ring, b.right->space);
        return true;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        bool inner;
        try {
            CheckReport inner_report = domain_variant
                                           ? is_approx_integral_domain(product->ctx)
                                           : is_approx_prime_ring(product->ctx);
            attach(rep, domain_variant ? "product-integral-domain" : "product-prime-ring",
                   inner_report, product->space);
            inner = inner_report.verdict;
            if (!inner) collect_witnesses(rep, inner_report, product->space);
        } catch (const Error& e) {
            if (!demotable(e.code())) throw;
            append_note(rep, std::string("product check fails definitionally: ") + e.what());
            inner = false;
        }
        return !inner;
    });
    if (concl) rep.conclusion = *concl;
}

void run_t12(const TheoremBundle& b, TheoremReport& rep) { run_never(b, rep, false); }
void run_t13(const TheoremBundle& b, TheoremReport& rep) { run_never(b, rep, true); }

void run_t14(const TheoremBundle& b, TheoremReport& rep) {
    if (!b.right->zero || !b.right->carrier.contains(*b.right->zero)) {
        append_note(rep, "right factor has no zero inside its carrier; entry not applicable");
        return;
    }
    std::optional<ProductContext> product;
    auto hyp = guarded(rep, "hypothesis", [&] {
        product = direct_product(*b.left, *b.right);
        Subset p = Subset::empty(product->space);
        for (auto a : b.left->carrier.members())
            p = p.with(product->pair_index(a, *b.right->zero));
        std::ostringstream os;
        os << "P = R1 x {" << label(b.right->space, *b.right->zero) << "}";
        append_note(rep, os.str());
        auto ir = is_approx_ideal(p, product->ctx);
        attach(rep, "P-ideal", ir, product->space);
        if (!ir.verdict) return false;
        auto pr = is_approx_prime_ideal(p, product->ctx);
        attach(rep, "P-prime", pr, product->space);
        return pr.verdict;
    });
    if (!hyp) return;
    rep.hypothesis = *hyp;
    if (!*hyp) return;

    auto concl = guarded(rep, "conclusion", [&] {
        auto dr = is_approx_integral_domain(*b.right);
        attach(rep, "right-integral-domain", dr, b.right->space);
        if (!dr.verdict) collect_witnesses(rep, dr, b.right->space);
        return dr.verdict;
    });
    if (concl) rep.conclusion = *concl;
}

struct Entry {
    TheoremInfo info;
    void (*run)(const TheoremBundle&, TheoremReport&);
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"T1", "A quotient by an approximately prime ideal is an approximately integral domain.",
          {"ring", "ideal"}},
         run_t1},
        {{"T2",
          "The complement of Phi*I in R is approximately multiplicatively closed when I is an "
          "approximately prime ideal.",
          {"ring", "ideal"}},
         run_t2},
        {{"T3", "The principal set (p) of a non-unit p is an approximately ideal.",
          {"ring", "element"}},
         run_t3},
        {{"T4",
          "A principal prime element of an approximately integral domain with unity is "
          "approximately irreducible.",
          {"ring", "element"}},
         run_t4},
        {{"T5",
          "If every proper approximately ideal is prime, the ring is an approximately integral "
          "domain.",
          {"ring"}},
         run_t5},
        {{"T6",
          "If every proper approximately ideal of an approximately integral domain with unity "
          "is prime, the ring is an approximately field.",
          {"ring"}},
         run_t6},
        {{"T7", "The product of two approximately ideals is an approximately ideal.",
          {"ring", "ideal", "ideal2"}},
         run_t7},
        {{"T8", "If a prime ideal A equals the ideal product BC, then B or C is contained in A.",
          {"ring", "ideal2", "ideal3"}},
         run_t8},
        {{"T9",
          "A ring is approximately prime exactly when no non-zero pair annihilates through "
          "every non-zero middle factor.",
          {"ring"}},
         run_t9},
        {{"T10a",
          "If the quotient R/I is an approximately prime ring, then I is an approximately "
          "prime ideal.",
          {"ring", "ideal"}},
         run_t10a},
        {{"T10b",
          "If I is an approximately prime ideal, then the quotient R/I is an approximately "
          "prime ring.",
          {"ring", "ideal"}},
         run_t10b},
        {{"T11",
          "The direct product of two approximately rings is an approximately ring when the "
          "upper approximations are closed under both operations.",
          {"left", "right"}},
         run_t11},
        {{"T12", "The direct product of two approximately rings is never an approximately "
                 "prime ring.",
          {"left", "right"}},
         run_t12},
        {{"T13", "The direct product of two approximately rings is never an approximately "
                 "integral domain.",
          {"left", "right"}},
         run_t13},
        {{"T14",
          "If R1 x {0} is an approximately prime ideal of the product, the right factor is an "
          "approximately integral domain.",
          {"left", "right"}},
         run_t14},
    };
    return table;
}

bool part_present(const TheoremBundle& b, const std::string& part) {
    if (part == "ring") return b.ring.has_value();
    if (part == "ideal") return b.ideal.has_value();
    if (part == "ideal2") return b.ideal2.has_value();
    if (part == "ideal3") return b.ideal3.has_value();
    if (part == "element") return b.element.has_value();
    if (part == "left") return b.left.has_value();
    if (part == "right") return b.right.has_value();
    return false;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const TheoremInfo* find_theorem(const std::string& id) {
    for (const auto& e : entries())
        if (e.info.id == id) return &e.info;
    return nullptr;
}

std::vector<std::string> theorem_ids() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.info.id);
    return out;
}

const char* to_string(Classification c) {
    switch (c) {
        case Classification::confirmed: return "confirmed";
        case Classification::vacuous: return "vacuous";
        case Classification::counterexample: return "counterexample";
        case Classification::not_applicable: return "not-applicable";
    }
    return "?";
}

TheoremReport verify_theorem(const std::string& id, const TheoremBundle& bundle) {
    const Entry* entry = nullptr;
    for (const auto& e : entries())
        if (e.info.id == id) entry = &e;
    if (!entry) raise(ErrorCode::usage, "unknown theorem id '" + id + "'");

    TheoremReport rep;
    rep.id = entry->info.id;
    rep.statement = entry->info.statement;

    for (const auto& part : entry->info.needs)
        if (!part_present(bundle, part)) {
            rep.classification = Classification::not_applicable;
            append_note(rep, "missing bundle part '" + part + "'");
            return rep;
        }

    entry->run(bundle, rep);

    if (!rep.hypothesis) {
        rep.classification = Classification::not_applicable;
    } else if (!*rep.hypothesis) {
        rep.classification = Classification::vacuous;
    } else if (!rep.conclusion) {
        rep.classification = Classification::not_applicable;
    } else {
        rep.classification = *rep.conclusion ? Classification::confirmed
                                             : Classification::counterexample;
    }
    return rep;
}

TheoremBundle resolve_bundle(const LoadedFixture& fx, const LoadedFixture* right_fx,
                             const TheoremInfo& info,
                             const std::map<std::string, std::string>& parts,
                             int subset_enum_limit) {
    TheoremBundle bundle;
    bundle.subset_enum_limit = subset_enum_limit;

    auto part = [&](const char* name) -> std::optional<std::string> {
        auto it = parts.find(name);
        if (it == parts.end()) return std::nullopt;
        return it->second;
    };
    auto needs = [&](const char* name) {
        for (const auto& n : info.needs)
            if (n == name) return true;
        return false;
    };

    std::optional<RingContext> ring;
    if (needs("ring")) {
        std::string name = part("ring").value_or(fx.contexts.empty() ? std::string()
                                                                     : fx.default_context());
        if (!name.empty()) {
            ring = fx.context(name).ctx;
            bundle.ring = ring;
        }
    }

    auto default_proper_subset = [&](const RingContext& ctx) -> std::optional<Subset> {
        for (const auto& [name, sub] : fx.subsets) {
            if (sub.empty()) continue;
            if (!sub.is_subset_of(ctx.carrier)) continue;
            if (sub == ctx.carrier) continue;
            return sub;
        }
        return std::nullopt;
    };

    auto resolve_ideal = [&](const char* key) -> std::optional<Subset> {
        if (auto name = part(key)) return fx.subset(*name);
        if (ring) return default_proper_subset(*ring);
        return std::nullopt;
    };
    if (needs("ideal")) bundle.ideal = resolve_ideal("ideal");
    if (needs("ideal2")) bundle.ideal2 = resolve_ideal("ideal2");
    if (needs("ideal3")) bundle.ideal3 = resolve_ideal("ideal3");

    if (needs("element") && ring) {
        if (auto name = part("element")) {
            auto idx = ring->space->find_label(*name);
            if (!idx) raise(ErrorCode::unknown_element, "unknown element '" + *name + "'");
            bundle.element = *idx;
        } else {
            for (auto x : ring->carrier.members()) {
                if (!ring->one || !is_approx_unit(x, *ring)) {
                    bundle.element = x;
                    break;
                }
            }
        }
    }

    if (needs("left")) {
        std::string name = part("left").value_or(fx.contexts.empty() ? std::string()
                                                                     : fx.default_context());
        if (!name.empty()) bundle.left = fx.context(name).ctx;
    }
    if (needs("right")) {
        const LoadedFixture& source = right_fx ? *right_fx : fx;
        std::string name;
        if (auto n = part("right")) {
            name = *n;
        } else if (!source.contexts.empty()) {
            auto it = source.contexts.begin();
            if (!right_fx && source.contexts.size() > 1) ++it;  // second context when available
            name = it->first;
        }
        if (!name.empty()) bundle.right = source.context(name).ctx;
    }
    return bundle;
}

SearchResult search_counterexamples(const std::string& id, const SearchBudget& budget) {
    const TheoremInfo* info = find_theorem(id);
    if (!info) raise(ErrorCode::usage, "unknown theorem id '" + id + "'");

    SearchResult out;
    out.id = id;
    out.budget = budget;

    auto stats = enumerate_structures(budget, shape_for(id), [&](const EnumeratedBundle& eb) {
        TheoremReport rep = replay_finding(id, eb);
        ++out.candidates;
        if (rep.classification == Classification::counterexample)
            out.findings.push_back({std::move(rep), eb});
        return true;
    });
    out.truncated = stats.truncated;
    return out;
}

TheoremReport replay_finding(const std::string& id, const EnumeratedBundle& eb) {
    const TheoremInfo* info = find_theorem(id);
    if (!info) raise(ErrorCode::usage, "unknown theorem id '" + id + "'");

    LoadedFixture fx = load_fixture(eb.doc);
    std::optional<LoadedFixture> fx2;
    if (eb.doc2) fx2 = load_fixture(*eb.doc2);

    std::map<std::string, std::string> parts;
    if (!eb.ring.empty()) parts["ring"] = eb.ring;
    if (!eb.ideal.empty()) parts["ideal"] = eb.ideal;
    if (!eb.ideal2.empty()) parts["ideal2"] = eb.ideal2;
    if (!eb.ideal3.empty()) parts["ideal3"] = eb.ideal3;
    if (!eb.element.empty()) parts["element"] = eb.element;
    if (!eb.left.empty()) parts["left"] = eb.left;
    if (!eb.right.empty()) parts["right"] = eb.right;

    TheoremBundle bundle = resolve_bundle(fx, fx2 ? &*fx2 : nullptr, *info, parts);
    return verify_theorem(id, bundle);
}

BundleShape shape_for(const std::string& theorem_id) {
    if (theorem_id == "T1" || theorem_id == "T2" || theorem_id == "T10a" ||
        theorem_id == "T10b")
        return BundleShape::with_ideal;
    if (theorem_id == "T3" || theorem_id == "T4") return BundleShape::with_element;
    if (theorem_id == "T7" || theorem_id == "T8") return BundleShape::with_two_ideals;
    if (theorem_id == "T11" || theorem_id == "T12" || theorem_id == "T13" ||
        theorem_id == "T14")
        return BundleShape::pair;
    return BundleShape::base;
}

}  // namespace proxring
