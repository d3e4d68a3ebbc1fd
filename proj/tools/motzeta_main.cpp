#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "motzeta/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"motzeta: exact zeta functions of motives over finite fields"};
    app.require_subcommand(1);

    std::optional<motzeta::Command> command;

    auto* zeta = app.add_subcommand("zeta", "Zeta function of a motive expression as num/den");
    {
        auto cmd = std::make_shared<motzeta::ZetaCmd>();
        zeta->add_option("expr", cmd->expr, "motive expression, e.g. \"P2\" or \"A1 - pt(1)\"")
            ->required();
        zeta->add_option("--q", cmd->q, "base field size (prime power)")->required();
        zeta->add_option("--order", cmd->order, "also report the series expansion to this order");
        zeta->callback([&command, cmd] { command = *cmd; });
    }

    auto* count = app.add_subcommand("count", "Point counts of a motive expression over F_{q^n}");
    {
        auto cmd = std::make_shared<motzeta::CountCmd>();
        count->add_option("expr", cmd->expr, "motive expression")->required();
        count->add_option("--q", cmd->q, "base field size (prime power)")->required();
        count->add_option("--n", cmd->n_max, "number of tower levels")
            ->required()
            ->check(CLI::PositiveNumber);
        count->callback([&command, cmd] { command = *cmd; });
    }

    auto* cv = app.add_subcommand("count-variety", "Brute-force point counts of a variety spec");
    {
        auto cmd = std::make_shared<motzeta::CountVarietyCmd>();
        cv->add_option("spec", cmd->spec_file, "variety spec JSON file")->required();
        cv->add_option("--n", cmd->n_max, "number of tower levels")
            ->required()
            ->check(CLI::PositiveNumber);
        cv->callback([&command, cmd] { command = *cmd; });
    }

    auto* rec = app.add_subcommand("reconstruct", "Minimal rational zeta from a counts file");
    {
        auto cmd = std::make_shared<motzeta::ReconstructCmd>();
        rec->add_option("counts", cmd->counts_file, "counts JSON file")->required();
        rec->callback([&command, cmd] { command = *cmd; });
    }

    auto* vl = app.add_subcommand("verify-lefschetz",
                                  "Brute counts vs. alternating trace predictions");
    {
        auto cmd = std::make_shared<motzeta::VerifyLefschetzCmd>();
        vl->add_option("spec", cmd->spec_file, "variety spec JSON file")->required();
        vl->add_option("cohomology", cmd->cohomology_file, "cohomology data JSON file")->required();
        vl->add_option("--n", cmd->n_max, "number of tower levels")
            ->required()
            ->check(CLI::PositiveNumber);
        vl->callback([&command, cmd] { command = *cmd; });
    }

    auto* wt = app.add_subcommand("witt", "Witt ring operation on zeta files");
    {
        auto cmd = std::make_shared<motzeta::WittOpCmd>();
        wt->add_option("op", cmd->op, "add, mul or neg")->required();
        wt->add_option("lhs", cmd->lhs_file, "left operand zeta JSON file")->required();
        wt->add_option("rhs", cmd->rhs_file, "right operand zeta JSON file (add/mul)");
        wt->callback([&command, cmd] { command = *cmd; });
    }

    auto* ck = app.add_subcommand("check", "Weil-style checks on a zeta file");
    {
        auto cmd = std::make_shared<motzeta::CheckCmd>();
        ck->add_option("kind", cmd->kind, "functional-equation or weil-bound")->required();
        ck->add_option("zeta", cmd->zeta_file, "zeta JSON file")->required();
        ck->add_option("--q", cmd->q, "base field size")->required();
        ck->add_option("--g", cmd->g, "genus (functional-equation only)");
        ck->callback([&command, cmd] { command = *cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return motzeta::kExitUsage;
    }

    return motzeta::run(*command, std::cout, std::cerr);
}
