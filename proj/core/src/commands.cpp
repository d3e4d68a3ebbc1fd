#include "motzeta/commands.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "motzeta/checks.hpp"
#include "motzeta/json_io.hpp"
#include "motzeta/motive.hpp"
#include "motzeta/motive_parser.hpp"
#include "motzeta/reconstruct.hpp"
#include "motzeta/variety.hpp"

namespace motzeta {

std::uint64_t enumeration_budget() {
    const char* env = std::getenv("MOTZETA_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw std::invalid_argument("MOTZETA_BUDGET must be a positive integer");
    return static_cast<std::uint64_t>(v);
}

namespace {

int run_zeta(const ZetaCmd& cmd, std::ostream& out) {
    const ZetaContext ctx = ZetaContext::make(cmd.q, cmd.order > 0 ? cmd.order : 10);
    const MotivePtr expr = parse_motive(cmd.expr);
    const WittVector w = eval_zeta(*expr, ctx);
    if (cmd.order > 0) {
        // append the series expansion after the fixed num/den fields
        std::string base = witt_to_json(w);
        base.pop_back();  // trailing '}'
        base += ",\"series\":[";
        const PowerSeries s = to_series(w, cmd.order);
        for (int i = 0; i <= s.order(); ++i) {
            if (i) base += ",";
            base += "\"" + s.coeff(i).str() + "\"";
        }
        base += "]}";
        out << base << "\n";
    } else {
        out << witt_to_json(w) << "\n";
    }
    return kExitOk;
}

int run_count(const CountCmd& cmd, std::ostream& out) {
    const ZetaContext ctx = ZetaContext::make(cmd.q);
    const MotivePtr expr = parse_motive(cmd.expr);
    out << counts_to_json(point_counts(*expr, ctx, cmd.n_max)) << "\n";
    return kExitOk;
}

int run_count_variety(const CountVarietyCmd& cmd, std::ostream& out) {
    const VarietySpec v = variety_from_json(load_file(cmd.spec_file));
    out << counts_to_json(counts_tower(v, static_cast<unsigned>(cmd.n_max), enumeration_budget()))
        << "\n";
    return kExitOk;
}

int run_reconstruct(const ReconstructCmd& cmd, std::ostream& out, std::ostream& err) {
    const GhostSequence counts = counts_from_json(load_file(cmd.counts_file));
    const std::optional<WittVector> w = reconstruct_zeta(counts);
    if (!w) {
        err << "no rational fit for the provided counts\n";
        return kExitVerifyFail;
    }
    out << witt_to_json(*w) << "\n";
    return kExitOk;
}

int run_verify_lefschetz(const VerifyLefschetzCmd& cmd, std::ostream& out) {
    const VarietySpec v = variety_from_json(load_file(cmd.spec_file));
    const CohomologyData coh = cohomology_from_json(load_file(cmd.cohomology_file));
    if (coh.q != 0 && coh.q != v.p)
        throw std::invalid_argument("verify-lefschetz: cohomology q does not match variety p");
    const LefschetzReport report =
        verify_lefschetz(v, coh.complex, static_cast<unsigned>(cmd.n_max), enumeration_budget());
    out << report_to_json(report) << "\n";
    return report.pass ? kExitOk : kExitVerifyFail;
}

int run_witt_op(const WittOpCmd& cmd, std::ostream& out) {
    const WittVector lhs = witt_from_json(load_file(cmd.lhs_file));
    WittVector result;
    if (cmd.op == "neg") {
        result = w_neg(lhs);
    } else if (cmd.op == "add" || cmd.op == "mul") {
        if (cmd.rhs_file.empty())
            throw std::invalid_argument("witt " + cmd.op + ": missing right-hand operand file");
        const WittVector rhs = witt_from_json(load_file(cmd.rhs_file));
        result = (cmd.op == "add") ? w_add(lhs, rhs) : w_mul(lhs, rhs);
    } else {
        throw std::invalid_argument("witt: unknown op '" + cmd.op + "' (use add, mul or neg)");
    }
    out << witt_to_json(result) << "\n";
    return kExitOk;
}

int run_check(const CheckCmd& cmd, std::ostream& out) {
    const WittVector w = witt_from_json(load_file(cmd.zeta_file));
    const mpz_class q(static_cast<unsigned long>(cmd.q));
    bool pass = false;
    if (cmd.kind == "functional-equation")
        pass = check_functional_equation(w, q, cmd.g);
    else if (cmd.kind == "weil-bound")
        pass = check_weil_bound(w, q);
    else
        throw std::invalid_argument("check: unknown kind '" + cmd.kind +
                                    "' (use functional-equation or weil-bound)");
    out << (pass ? "{\"pass\":true}" : "{\"pass\":false}") << "\n";
    return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        return std::visit(
            [&out, &err](const auto& c) -> int {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, ZetaCmd>) return run_zeta(c, out);
                else if constexpr (std::is_same_v<T, CountCmd>) return run_count(c, out);
                else if constexpr (std::is_same_v<T, CountVarietyCmd>) return run_count_variety(c, out);
                else if constexpr (std::is_same_v<T, ReconstructCmd>) return run_reconstruct(c, out, err);
                else if constexpr (std::is_same_v<T, VerifyLefschetzCmd>) return run_verify_lefschetz(c, out);
                else if constexpr (std::is_same_v<T, WittOpCmd>) return run_witt_op(c, out);
                else return run_check(c, out);
            },
            cmd);
    } catch (const BudgetExceeded& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace motzeta
