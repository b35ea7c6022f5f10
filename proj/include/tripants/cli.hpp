#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tripants/explorer.hpp"
#include "tripants/farey.hpp"
#include "tripants/freegroup.hpp"
#include "tripants/pushmap.hpp"
#include "tripants/triarc.hpp"
#include "tripants/verify.hpp"

namespace tripants::cli {

namespace detail {

inline void printReport(const verify::Report& report, std::ostream& out) {
    for (const verify::CheckResult& c : report.checks)
        out << (c.pass ? "[PASS] " : "[FAIL] ") << report.suite << "." << c.name << ": "
            << c.detail << "\n";
    out << "suite " << report.suite << ": " << report.passedCount() << "/"
        << report.checks.size() << " passed\n";
}

} // namespace detail

// Dispatches one CLI invocation. Exit status: 0 on success (and all verify
// checks passing), 1 on domain errors or failed checks, 2 on parse errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tri-pants graph toolkit for the twice-punctured torus"};
    app.name("tripants");
    app.require_subcommand(1);
    int exitCode = 0;

    // neighbors <triarc>
    std::string neighborsArg;
    CLI::App* neighborsCmd =
        app.add_subcommand("neighbors", "list the nine adjacent tri-arcs");
    neighborsCmd->add_option("triarc", neighborsArg, "tri-arc, e.g. a,b,ab")->required();
    neighborsCmd->callback([&] {
        for (const Neighbor& n : neighbors(TriArc::parse(neighborsArg)))
            out << n.move.text() << "\t" << n.triArc.text() << "\n";
    });

    // flip --arc <word> --kind big|small1|small2 <triarc>
    std::string flipArc;
    std::string flipKind;
    std::string flipTriArc;
    CLI::App* flipCmd = app.add_subcommand("flip", "apply one elementary flip");
    flipCmd->add_option("--arc", flipArc, "arc to flip")->required();
    flipCmd->add_option("--kind", flipKind, "flip kind")
        ->required()
        ->check(CLI::IsMember({"big", "small1", "small2"}));
    flipCmd->add_option("triarc", flipTriArc, "tri-arc to flip")->required();
    flipCmd->callback([&] {
        TriArc t = TriArc::parse(flipTriArc);
        ArcClass arc = canonicalArc(parseWord(flipArc));
        if (flipKind == "big")
            out << bigFlip(t, arc).first.text() << "\n";
        else if (flipKind == "small1")
            out << smallFlips(t, arc).first.text() << "\n";
        else
            out << smallFlips(t, arc).second.text() << "\n";
    });

    // project <triarc>
    std::string projectArg;
    CLI::App* projectCmd =
        app.add_subcommand("project", "project a tri-arc onto the Farey dual");
    projectCmd->add_option("triarc", projectArg, "tri-arc to project")->required();
    projectCmd->callback([&] { out << project(TriArc::parse(projectArg)).text() << "\n"; });

    // push <pushword> <triarc>
    std::string pushWordArg;
    std::string pushTriArc;
    CLI::App* pushCmd = app.add_subcommand("push", "apply a point-push automorphism");
    pushCmd->add_option("pushword", pushWordArg, "push word over a/A/b/B")->required();
    pushCmd->add_option("triarc", pushTriArc, "tri-arc to push")->required();
    pushCmd->callback([&] {
        out << applyPush(PushWord::parse(pushWordArg), TriArc::parse(pushTriArc)).text()
            << "\n";
    });

    // distance [--max N | --lower-bound] <triarc> <triarc>
    int distanceMax = 6;
    bool lowerBoundOnly = false;
    std::string distFrom;
    std::string distTo;
    CLI::App* distanceCmd =
        app.add_subcommand("distance", "elementary-move distance between tri-arcs");
    CLI::Option* maxOpt =
        distanceCmd->add_option("--max", distanceMax, "search radius (default 6)");
    CLI::Option* lbOpt = distanceCmd->add_flag("--lower-bound", lowerBoundOnly,
                                               "projection lower bound only");
    maxOpt->excludes(lbOpt);
    lbOpt->excludes(maxOpt);
    distanceCmd->add_option("from", distFrom, "source tri-arc")->required();
    distanceCmd->add_option("to", distTo, "target tri-arc")->required();
    distanceCmd->callback([&] {
        TriArc t1 = TriArc::parse(distFrom);
        TriArc t2 = TriArc::parse(distTo);
        if (lowerBoundOnly) {
            out << lowerBoundDistance(t1, t2) << "\n";
            return;
        }
        auto d = exactDistance(t1, t2, distanceMax);
        if (d)
            out << *d << "\n";
        else
            out << "not-found\n";
    });

    // farey-distance <triangle> <triangle>
    std::string fareyFrom;
    std::string fareyTo;
    CLI::App* fareyCmd =
        app.add_subcommand("farey-distance", "distance in the dual of the Farey graph");
    fareyCmd->add_option("from", fareyFrom, "triangle, e.g. inf,0/1,1/1")->required();
    fareyCmd->add_option("to", fareyTo, "triangle")->required();
    fareyCmd->callback([&] {
        out << dualDistance(FareyTriangle::parse(fareyFrom), FareyTriangle::parse(fareyTo))
            << "\n";
    });

    // explore --radius N [--filter all|big|small] [--format dot|jsonl] <triarc>
    int exploreRadius = 0;
    std::string exploreFilter = "all";
    std::string exploreFormat = "dot";
    std::string exploreBase;
    CLI::App* exploreCmd =
        app.add_subcommand("explore", "materialize a ball of the tri-pants graph");
    exploreCmd->add_option("--radius", exploreRadius, "ball radius")->required();
    exploreCmd->add_option("--filter", exploreFilter, "edge filter (default all)")
        ->check(CLI::IsMember({"all", "big", "small"}));
    exploreCmd->add_option("--format", exploreFormat, "output format (default dot)")
        ->check(CLI::IsMember({"dot", "jsonl"}));
    exploreCmd->add_option("triarc", exploreBase, "base tri-arc")->required();
    exploreCmd->callback([&] {
        EdgeFilter filter = exploreFilter == "all"   ? EdgeFilter::All
                            : exploreFilter == "big" ? EdgeFilter::BigOnly
                                                     : EdgeFilter::SmallOnly;
        ExplorationBall ball = exploreBall(TriArc::parse(exploreBase), exploreRadius, filter);
        if (exploreFormat == "dot")
            writeDot(ball, out);
        else
            writeJsonl(ball, out);
    });

    // path [--fiber-cap N] <triarc> <triarc>
    int fiberCap = 100000;
    std::string pathFrom;
    std::string pathTo;
    CLI::App* pathCmd =
        app.add_subcommand("path", "constructive move sequence between tri-arcs");
    pathCmd->add_option("--fiber-cap", fiberCap, "fiber search budget (default 100000)");
    pathCmd->add_option("from", pathFrom, "source tri-arc")->required();
    pathCmd->add_option("to", pathTo, "target tri-arc")->required();
    pathCmd->callback([&] {
        TriArc from = TriArc::parse(pathFrom);
        PathReport path = findPath(from, TriArc::parse(pathTo), fiberCap);
        out << "length\t" << path.length() << "\n";
        TriArc cur = from;
        for (const MoveLabel& m : path.moves) {
            cur = applyMove(cur, m);
            out << m.text() << "\t" << cur.text() << "\n";
        }
    });

    // verify --suite <name>|all [--radius N] [--seed N]
    std::string verifySuite;
    verify::Options verifyOptions;
    CLI::App* verifyCmd =
        app.add_subcommand("verify", "run the structural verification suites");
    std::vector<std::string> suiteChoices = verify::suiteNames();
    suiteChoices.push_back("all");
    verifyCmd->add_option("--suite", verifySuite, "suite name or all")
        ->required()
        ->check(CLI::IsMember(suiteChoices));
    verifyCmd->add_option("--radius", verifyOptions.radius, "ball radius (default 4)")
        ->check(CLI::Range(0, kDefaultRadiusCap));
    verifyCmd->add_option("--seed", verifyOptions.seed, "RNG seed (default 12345)");
    verifyCmd->callback([&] {
        int passed = 0;
        int total = 0;
        if (verifySuite == "all") {
            for (const verify::Report& report : verify::runAll(verifyOptions)) {
                detail::printReport(report, out);
                passed += report.passedCount();
                total += static_cast<int>(report.checks.size());
            }
            out << "total: " << passed << "/" << total << " passed\n";
        } else {
            verify::Report report = verify::runSuite(verifySuite, verifyOptions);
            detail::printReport(report, out);
            passed = report.passedCount();
            total = static_cast<int>(report.checks.size());
        }
        if (passed != total)
            exitCode = 1;
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ParseError: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == "ParseError" ? 2 : 1;
    }
    return exitCode;
}

} // namespace tripants::cli
