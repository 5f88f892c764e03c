// Minimal library tour: build the bundled capture-the-flag network, plant a
// few deceptive elements, train two attackers side by side, and keep the
// learned Q-table for later.
//
//   cmake --build build --target quickstart && ./build/demo/quickstart

#include <cstdio>

#include "honeysim/harness.hpp"
#include "honeysim/outputs.hpp"
#include "honeysim/policy_io.hpp"

using namespace honeysim;

int main() {
    // Three honeypots cloned from the nodes nearest the attacker's foothold.
    const Network plain = builtin_toyctf();
    const Network defended =
        apply_placement(plain, PlacementSpec::frontloaded(DeceptionKind::Honeypot, 3));

    Engine eng(defended);
    std::printf("network: %zu nodes (%zu real), goal: own everything real + key terrain\n",
                defended.nodes.size(), plain.nodes.size());

    // A learning attacker and a random one, same budget.
    QTabAgent qtab(eng, /*seed=*/7);
    RandAgent rand_agent(eng, /*seed=*/7);
    const int episodes = 40, step_limit = 2000;

    int qtab_wins = 0, rand_wins = 0;
    for (int ep = 0; ep < episodes; ++ep) {
        qtab_wins += run_episode(eng, qtab, ep, step_limit).win;
        rand_wins += run_episode(eng, rand_agent, ep, step_limit).win;
    }
    std::printf("over %d episodes: QTAB won %d, RAND won %d\n", episodes, qtab_wins, rand_wins);

    // One traced episode: where did the attacker's effort go?
    EpisodeTrace trace;
    run_episode(eng, qtab, episodes, step_limit, /*seed_label=*/7, &trace);
    const WasteBreakdown waste = wasted_resources(eng, trace);
    const DetectionSummary det = defender_detections(trace);
    std::printf("traced episode: %d steps, %.1f%% productive, %.1f%% wasted on deception\n",
                waste.total, waste.class_pct(StepClass::Productive),
                waste.class_pct(StepClass::WastedDeceptive));
    if (det.count > 0)
        std::printf("defender alerted %d times, first at step %d\n", det.count, det.first_step);

    save_policy_file("quickstart_qtab_policy.json", qtab);
    std::printf("saved Q-table (%zu entries) to quickstart_qtab_policy.json\n",
                qtab.table().size());
    return 0;
}
