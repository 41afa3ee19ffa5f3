// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <r2ps/cli.hpp>
#include <r2ps/r2ps.hpp>

using namespace r2ps;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
    int failures = 0;

    void run(const std::string& name, const std::function<void()>& body) {
        try {
            body();
            std::cout << "PASS  " << name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  " << name << ": " << e.what() << "\n";
        }
    }
};

void require(bool condition, const std::string& message) {
    if (!condition)
        throw std::runtime_error(message);
}

void require_close(double actual, double expected, double tol, const std::string& what) {
    if (std::abs(actual - expected) > tol) {
        std::ostringstream text;
        text.precision(17);
        text << what << ": " << actual << " vs " << expected << " (tol " << tol << ")";
        throw std::runtime_error(text.str());
    }
}

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::filesystem::path(R2PS_FIXTURE_DIR) / name, std::ios::binary);
    require(in.good(), "cannot open fixture " + name);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

MassFunction random_mass(std::mt19937& rng, const Frame& frame,
                         const std::vector<Event>& events, std::size_t max_focal) {
    std::vector<Event> pool = events;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<std::size_t> count(1, std::min(max_focal, pool.size()));
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    std::size_t k = count(rng);
    std::vector<double> weights(k);
    double total = 0.0;
    for (auto& w : weights)
        total += (w = weight(rng));
    std::vector<std::pair<Event, double>> focal;
    for (std::size_t i = 0; i < k; ++i)
        focal.emplace_back(pool[i], weights[i] / total);
    return MassFunction(frame, std::move(focal));
}

struct RandomInstance {
    Frame frame;
    MassFunction m1;
    MassFunction m2;
    MassFunction m3;
};

RandomInstance random_instance(std::mt19937& rng) {
    static const std::vector<std::string> labels = {"a", "b", "c"};
    std::uniform_int_distribution<std::size_t> size(1, 3);
    Frame frame(std::vector<std::string>(labels.begin(), labels.begin() + size(rng)));
    std::vector<Event> pool = enumerate_r2es(frame, 3);
    MassFunction m1 = random_mass(rng, frame, pool, 5);
    MassFunction m2 = random_mass(rng, frame, pool, 5);
    MassFunction m3 = random_mass(rng, frame, pool, 5);
    return {frame, std::move(m1), std::move(m2), std::move(m3)};
}

} // namespace

int main() {
    const auto suite_start = Clock::now();
    Harness harness;

    const EvidenceDocument example3 = parse_document(read_fixture("example3.ev"));
    const EvidenceDocument table3 = parse_document(read_fixture("table3.ev"));
    const EvidenceDocument table4 = parse_document(read_fixture("table4.ev"));
    const Frame frame = example3.frame();
    auto ev = [&](std::initializer_list<std::string_view> l) { return frame.event(l); };

    // 1. Golden junction table: all 24 left/right junctions, symbolic equality.
    harness.run("criterion 1: golden junction table (24 cells, < 1 ms)", [&] {
        const Event phi = Event::empty(frame);
        struct Row {
            Event m, n, lj, rj;
        };
        const std::vector<Row> table = {
            {ev({"a", "b"}), ev({"b", "a"}), ev({"a", "b"}), ev({"b", "a"})},
            {ev({"a", "b"}), ev({"b", "b"}), ev({"b"}), ev({"b", "b"})},
            {ev({"a", "b"}), ev({"c", "a"}), ev({"a"}), ev({"a"})},
            {ev({"a", "b"}), ev({"a", "c", "c"}), ev({"a"}), ev({"a"})},
            {ev({"b"}), ev({"b", "a"}), ev({"b"}), ev({"b"})},
            {ev({"b"}), ev({"b", "b"}), ev({"b"}), ev({"b", "b"})},
            {ev({"b"}), ev({"c", "a"}), phi, phi},
            {ev({"b"}), ev({"a", "c", "c"}), phi, phi},
            {ev({"a", "a", "c"}), ev({"b", "a"}), ev({"a", "a"}), ev({"a"})},
            {ev({"a", "a", "c"}), ev({"b", "b"}), phi, phi},
            {ev({"a", "a", "c"}), ev({"c", "a"}), ev({"a", "a", "c"}), ev({"c", "a"})},
            {ev({"a", "a", "c"}), ev({"a", "c", "c"}), ev({"a", "a", "c"}), ev({"a", "c", "c"})},
        };
        std::size_t empty_cells = 0;
        const auto start = Clock::now();
        for (const Row& row : table) {
            require(left_junction(row.m, row.n) == row.lj,
                    "left junction mismatch for " + row.m.to_string() + " / " + row.n.to_string());
            require(right_junction(row.m, row.n) == row.rj,
                    "right junction mismatch for " + row.m.to_string() + " / " + row.n.to_string());
            if (row.lj.is_empty())
                ++empty_cells;
        }
        const auto elapsed = Clock::now() - start;
        require(empty_cells == 3, "expected exactly three empty junction rows");
        require(elapsed < std::chrono::milliseconds(1), "junction table exceeded 1 ms");
    });

    // 2. Example reproduction: K exactly 0.24; both sums within 5e-4 of print.
    harness.run("criterion 2: worked combination example (K = 0.24, sums to 5e-4)", [&] {
        const MassFunction& m1 = example3.source("M1");
        const MassFunction& m2 = example3.source("M2");
        require(conflict_left(m1, m2) == 0.24, "left conflict is not exactly 0.24");
        require(conflict_right(m1, m2) == 0.24, "right conflict is not exactly 0.24");

        FusionOutcome left = left_junctional_sum(m1, m2);
        require(left.conflict == 0.24, "outcome conflict is not exactly 0.24");
        require(left.result.size() == 5, "left sum has wrong focal count");
        require_close(left.result.mass(ev({"a", "b"})), 0.105, 5e-4, "left (a b)");
        require_close(left.result.mass(ev({"b"})), 0.355, 5e-4, "left (b)");
        require_close(left.result.mass(ev({"a"})), 0.263, 5e-4, "left (a)");
        require_close(left.result.mass(ev({"a", "a"})), 0.079, 5e-4, "left (a a)");
        require_close(left.result.mass(ev({"a", "a", "c"})), 0.197, 5e-4, "left (a a c)");

        FusionOutcome right = right_junctional_sum(m1, m2);
        require(right.result.size() == 6, "right sum has wrong focal count");
        require_close(right.result.mass(ev({"b", "a"})), 0.105, 5e-4, "right (b a)");
        require_close(right.result.mass(ev({"b", "b"})), 0.276, 5e-4, "right (b b)");
        require_close(right.result.mass(ev({"b"})), 0.079, 5e-4, "right (b)");
        require_close(right.result.mass(ev({"a"})), 0.342, 5e-4, "right (a)");
        require_close(right.result.mass(ev({"c", "a"})), 0.118, 5e-4, "right (c a)");
        require_close(right.result.mass(ev({"a", "c", "c"})), 0.079, 5e-4, "right (a c c)");
    });

    // 3. Consistency: three routes agree to 1e-12 on the worked pair and to
    //    1e-9 on 200 seeded random pairs; reference set-level row to 5e-4.
    harness.run("criterion 3: consistency (1e-12 worked pair, 200 random pairs, < 1 s)", [&] {
        const auto start = Clock::now();
        const MassFunction& m1 = example3.source("M1");
        const MassFunction& m2 = example3.source("M2");
        PropertyReport report = check_consistency(m1, m2, 1e-12);
        require(report.pass, "worked operands deviate beyond 1e-12");

        SetMassFunction combined = dempster_combine(project_mass(m1), project_mass(m2));
        require_close(combined.mass(frame.set({"a"})), 0.342, 5e-4, "set row (a)");
        require_close(combined.mass(frame.set({"a", "b"})), 0.105, 5e-4, "set row (a b)");
        require_close(combined.mass(frame.set({"b"})), 0.355, 5e-4, "set row (b)");
        require_close(combined.mass(frame.set({"a", "c"})), 0.197, 5e-4, "set row (a c)");

        std::mt19937 rng(20250809);
        int checked = 0;
        int attempts = 0;
        while (checked < 200 && attempts < 10000) {
            ++attempts;
            RandomInstance instance = random_instance(rng);
            try {
                PropertyReport random_report =
                    check_consistency(instance.m1, instance.m2, 1e-9);
                require(random_report.pass, "random pair broke consistency at attempt " +
                                                std::to_string(attempts));
                ++checked;
            } catch (const TotalConflictError&) {
            }
        }
        require(checked == 200, "could not draw 200 combinable random pairs");
        require(Clock::now() - start < std::chrono::seconds(1), "consistency suite exceeded 1 s");
    });

    // 4. Non-associativity: both groupings match their reference rows to
    //    1e-3, differ from each other by more than 0.1, and the intermediate
    //    right sum matches the recomputed value for its often-miscopied cell.
    harness.run("criterion 4: mixed-direction counterexample (1e-3 rows, > 0.1 apart)", [&] {
        const MassFunction& m1 = table3.source("M1");
        const MassFunction& m2 = table3.source("M2");
        const MassFunction& m3 = table3.source("M3");

        FusionOutcome inner = right_junctional_sum(m2, m3);
        require_close(inner.result.mass(ev({"a"})), 0.529, 1e-3, "intermediate (a)");
        require_close(inner.result.mass(ev({"a", "c", "c"})), 0.177, 1e-3, "intermediate (a c c)");
        require_close(inner.result.mass(ev({"b"})), 0.177, 1e-3, "intermediate (b)");
        // this cell is often miscopied as 0.064; the definitions give 2/17
        require_close(inner.result.mass(ev({"b", "a"})), 2.0 / 17.0, 1e-12,
                      "intermediate (b a) against the recomputed value");

        MassFunction grouped_left = right_junctional_sum(left_junctional_sum(m1, m2).result, m3).result;
        require_close(grouped_left.mass(ev({"a"})), 0.648, 1e-3, "grouping 1 (a)");
        require_close(grouped_left.mass(ev({"a", "c", "c"})), 0.072, 1e-3, "grouping 1 (a c c)");
        require_close(grouped_left.mass(ev({"b"})), 0.216, 1e-3, "grouping 1 (b)");
        require_close(grouped_left.mass(ev({"b", "a"})), 0.064, 1e-3, "grouping 1 (b a)");

        MassFunction grouped_right = left_junctional_sum(m1, inner.result).result;
        require_close(grouped_right.mass(ev({"a"})), 0.384, 1e-3, "grouping 2 (a)");
        require_close(grouped_right.mass(ev({"a", "a"})), 0.264, 1e-3, "grouping 2 (a a)");
        require_close(grouped_right.mass(ev({"a", "b"})), 0.064, 1e-3, "grouping 2 (a b)");
        require_close(grouped_right.mass(ev({"a", "a", "c"})), 0.072, 1e-3, "grouping 2 (a a c)");
        require_close(grouped_right.mass(ev({"b"})), 0.216, 1e-3, "grouping 2 (b)");

        MassDelta delta = compare_masses(grouped_left, grouped_right);
        require(delta.max_deviation > 0.1, "groupings unexpectedly close");
    });

    // 5. Algebraic law suite on 200 seeded random instances.
    harness.run("criterion 5: algebraic law suite (200 random instances)", [&] {
        std::mt19937 rng(1148101);
        int checked = 0;
        int attempts = 0;
        while (checked < 200 && attempts < 10000) {
            ++attempts;
            RandomInstance instance = random_instance(rng);
            const MassFunction& m1 = instance.m1;
            const MassFunction& m2 = instance.m2;
            const MassFunction& m3 = instance.m3;
            try {
                require_close(conflict_left(m1, m2), conflict_right(m1, m2), 1e-12,
                              "conflict symmetry");

                FusionOutcome right = right_junctional_sum(m1, m2);
                FusionOutcome swapped = left_junctional_sum(m2, m1);
                require(masses_equal(right.result, swapped.result, 1e-12),
                        "right sum vs swapped left sum");

                require(masses_equal(left_junctional_sum(m1, m2).result,
                                     left_junctional_sum(m1, lift_set_mass(project_mass(m2))).result,
                                     1e-12),
                        "right-operand projection invariance");

                require(check_associativity(Rule::left, Rule::left, m1, m2, m3, 1e-9).pass,
                        "left associativity");
                require(check_associativity(Rule::right, Rule::right, m1, m2, m3, 1e-9).pass,
                        "right associativity");

                PropertyReport matthew = check_pseudo_matthew(Rule::left, {m1, m2, m3}, 1e-9);
                require(matthew.pass, "pseudo-matthew tail invariance or distinct-result bound");
                PropertyReport matthew_right =
                    check_pseudo_matthew(Rule::right, {m1, m2, m3}, 1e-9);
                require(matthew_right.pass, "right-rule pseudo-matthew");
                ++checked;
            } catch (const TotalConflictError&) {
            }
        }
        require(checked == 200, "could not draw 200 combinable random instances");
    });

    // 6. Decision pipeline on the three expert assertions.
    harness.run("criterion 6: decision pipeline (oracle fold to 1e-12, reference winners)", [&] {
        ExpertPanel panel(table4.frame(), table4.sources());
        std::vector<FusionOutcome> outcomes = fuse_all_orders(panel);
        require(outcomes.size() == 3, "expected one outcome per expert");

        SetMassFunction oracle =
            dempster_combine(dempster_combine(project_mass(panel.experts()[0].second),
                                              project_mass(panel.experts()[1].second)),
                             project_mass(panel.experts()[2].second));
        for (const FusionOutcome& outcome : outcomes) {
            MassDelta delta = compare_masses(project_mass(outcome.result), oracle);
            require(delta.same_support && delta.max_deviation <= 1e-12,
                    "outcome projection deviates from the oracle fold");
        }

        // the two-expert reference row that does recompute: sources 1 and 3
        SetMassFunction m13 = dempster_combine(project_mass(panel.experts()[0].second),
                                               project_mass(panel.experts()[2].second));
        require_close(m13.mass(frame.set({"a"})), 0.65, 5e-3, "m13 (a)");
        require_close(m13.mass(frame.set({"a", "b"})), 0.32, 5e-3, "m13 (a b)");
        require_close(m13.mass(frame.set({"c"})), 0.03, 5e-3, "m13 (c)");

        // the remaining reference rows do not follow from the definitions;
        // the recomputed values differ well beyond their quoted precision
        SetMassFunction m12 = dempster_combine(project_mass(panel.experts()[0].second),
                                               project_mass(panel.experts()[1].second));
        require(std::abs(m12.mass(frame.set({"a"})) - 0.77) > 5e-3,
                "reference row m12 unexpectedly matches the definitions");
        SetMassFunction m23 = dempster_combine(project_mass(panel.experts()[1].second),
                                               project_mass(panel.experts()[2].second));
        require(std::abs(m23.mass(frame.set({"a"})) - 0.43) > 5e-3,
                "reference row m23 unexpectedly matches the definitions");
        require(std::abs(oracle.mass(frame.set({"a"})) - 0.78) > 5e-3,
                "reference row m123 unexpectedly matches the definitions");

        DecisionReport report = decide(panel);
        require(report.decision.is_focal(frame.event({"a"})), "winner for {a} is not (a)");
        require(report.decision.is_focal(frame.event({"a", "b"})),
                "winner for {a b} is not (a b)");
        require(!report.decision.is_focal(frame.event({"a", "a"})), "(a a) won despite (a)");
        require(!report.decision.is_focal(frame.event({"b", "a"})), "(b a) won despite (a b)");
        // every winner here is the canonical event of its class
        for (const auto& [set, mass] : oracle.focal())
            require_close(report.decision.mass(set.canonical_event()), mass, 1e-12,
                          "decision mass for {" + set.to_string() + "}");
    });

    // 7. Parser and CLI: fixture round trips, 10k fuzzed lines, enumerate count.
    harness.run("criterion 7: parser round trips, 10k fuzzed lines, enumerate count", [&] {
        std::vector<std::filesystem::path> fixtures;
        for (const auto& entry : std::filesystem::directory_iterator(R2PS_FIXTURE_DIR))
            if (entry.path().extension() == ".ev")
                fixtures.push_back(entry.path());
        std::sort(fixtures.begin(), fixtures.end());
        require(!fixtures.empty(), "no fixtures found");
        for (const auto& path : fixtures) {
            std::ifstream in(path, std::ios::binary);
            std::ostringstream buffer;
            buffer << in.rdbuf();
            EvidenceDocument original = parse_document(buffer.str());
            EvidenceDocument reparsed = parse_document(render(original, 17));
            require(reparsed.frame().labels() == original.frame().labels(),
                    "frame changed in round trip: " + path.filename().string());
            require(reparsed.sources().size() == original.sources().size(),
                    "source count changed: " + path.filename().string());
            for (std::size_t i = 0; i < original.sources().size(); ++i) {
                require(reparsed.sources()[i].first == original.sources()[i].first,
                        "source name changed: " + path.filename().string());
                const MassFunction& a = original.sources()[i].second;
                const MassFunction& b = reparsed.sources()[i].second;
                require(a.size() == b.size(), "focal count changed");
                for (const auto& [event, mass] : a.focal())
                    require(b.mass(event) == mass,
                            "mass changed in round trip: " + path.filename().string());
            }
        }

        std::mt19937 rng(777216000);
        const std::string alphabet = "ab c:#.0123456789eE+-\t_frame source end\r\\\"";
        std::uniform_int_distribution<std::size_t> length(0, 40);
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        std::uniform_int_distribution<int> raw_byte(0, 255);
        std::uniform_int_distribution<int> use_raw(0, 9);
        for (int iteration = 0; iteration < 10000; ++iteration) {
            std::string line;
            std::size_t n = length(rng);
            for (std::size_t i = 0; i < n; ++i) {
                if (use_raw(rng) == 0)
                    line += static_cast<char>(raw_byte(rng));
                else
                    line += alphabet[pick(rng)];
            }
            try {
                parse_document(line);
            } catch (const ParseError&) {
                // structured error; anything else aborts the criterion
            }
        }

        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run({"enumerate", "--frame", "a b c", "--max-len", "3", "--count-only"},
                            out, err);
        require(code == 0, "enumerate exited with " + std::to_string(code));
        require(out.str() == "39\n", "enumerate printed '" + out.str() + "'");
    });

    const auto total = Clock::now() - suite_start;
    harness.run("overall runtime under 10 s", [&] {
        require(total < std::chrono::seconds(10), "acceptance suite exceeded 10 s");
    });
    std::cout << (harness.failures == 0 ? "all criteria passed" : "criteria FAILED") << " in "
              << std::chrono::duration_cast<std::chrono::milliseconds>(total).count() << " ms\n";
    return harness.failures == 0 ? 0 : 1;
}
