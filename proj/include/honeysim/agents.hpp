#pragma once

// Attacker agents:
//   RAND  uniform over valid actions
//   CRED  prefers connect actions that spend an unused credential
//   QTAB  tabular Q-learning over an abstracted state/action space
//   DQL   deep Q-learning (replay buffer + target network) over the same
//         action abstraction with a richer feature vector
//
// The learners act on action signatures rather than raw actions: a signature
// is (action kind, path slot of the target, and for connects whether the
// credential claims to open that exact target/port). Knowledge transfers
// across concrete nodes while the signature space stays small.
//
// Each agent owns its RNG; for a fixed seed and scenario the whole episode
// stream is deterministic.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "honeysim/engine.hpp"
#include "honeysim/errors.hpp"
#include "honeysim/mlp.hpp"
#include "honeysim/rng.hpp"

namespace honeysim {

enum class AgentKind : std::uint8_t { Rand, Cred, QTab, Dql };

inline const char* to_string(AgentKind k) {
    switch (k) {
        case AgentKind::Rand: return "RAND";
        case AgentKind::Cred: return "CRED";
        case AgentKind::QTab: return "QTAB";
        case AgentKind::Dql: return "DQL";
    }
    return "?";
}

inline std::optional<AgentKind> agent_kind_from(const std::string& s) {
    if (s == "RAND" || s == "rand") return AgentKind::Rand;
    if (s == "CRED" || s == "cred") return AgentKind::Cred;
    if (s == "QTAB" || s == "qtab") return AgentKind::QTab;
    if (s == "DQL" || s == "dql") return AgentKind::Dql;
    return std::nullopt;
}

struct EpsilonSchedule {
    double start = 0.9;
    double floor = 0.1;
    double decay = 0.985; // per episode

    double at(int episode) const {
        double e = start;
        for (int i = 0; i < episode; ++i) {
            e *= decay;
            if (e <= floor) return floor;
        }
        return e < floor ? floor : e;
    }
};

struct AgentConfig {
    EpsilonSchedule epsilon;
    double alpha = 0.1;            // QTAB step size
    double gamma = 0.015;          // discount for both learners
    double lr = 1e-3;              // DQL Adam learning rate
    int hidden = 64;               // DQL hidden units
    int batch = 64;                // DQL minibatch
    int replay_capacity = 10000;   // DQL transition buffer
    int target_sync = 250;         // DQL updates between target refreshes
    int train_period = 16;         // DQL env steps per batch update
    double reward_scale = 1e-3;    // DQL internal reward scaling
};

// Abstracted view of a SimState: how much is owned, how much is known but
// not taken, and how many cached credentials have never opened a real node.
struct StateSummary {
    int owned = 0;
    int disc_not_owned = 0;
    int unused_creds = 0;

    bool operator==(const StateSummary&) const = default;
};

inline StateSummary summarize(const Engine& eng, const SimState& st) {
    StateSummary s;
    for (std::size_t i = 0; i < eng.node_count(); ++i) {
        s.owned += st.owned[i] != 0;
        s.disc_not_owned += st.discovered[i] && !st.owned[i];
    }
    for (std::size_t c = 0; c < eng.credential_count(); ++c)
        s.unused_creds += st.cred_cached[c] && !st.cred_used_real[c];
    return s;
}

inline std::uint32_t state_key(const StateSummary& s) {
    auto clamp = [](int v) { return std::uint32_t(v < 0 ? 0 : (v > 255 ? 255 : v)); };
    return (clamp(s.owned) << 16) | (clamp(s.disc_not_owned) << 8) | clamp(s.unused_creds);
}

// Signature of an action: (kind, target's path position). Slot buckets are
// 0 for the foothold, 1..P for path positions, and P+1 for anything off the
// path (deceptive clones, dummies). Layout for a path of P entries:
//   [0, P+2)            local on slot
//   [P+2, 2(P+2))       remote against slot
//   [2(P+2), 3(P+2))    connect to slot
// Credentials are NOT part of the signature: every connect against one node
// looks alike, so honey credentials poison the value of the real ones.
class SignatureSpace {
  public:
    explicit SignatureSpace(const Engine& eng) : path_(int(eng.path_size())) {}

    int count() const { return 3 * (path_ + 2); }

    int of(const Engine& eng, const Action& act) const {
        const std::uint16_t target = act.kind == ActionKind::Remote ? act.b : act.a;
        const int slot = eng.path_slot(target);
        const int bucket = slot >= 0 ? slot : path_ + 1;
        switch (act.kind) {
            case ActionKind::Local: return bucket;
            case ActionKind::Remote: return (path_ + 2) + bucket;
            case ActionKind::Connect: return 2 * (path_ + 2) + bucket;
        }
        return 0;
    }

  private:
    int path_;
};

class Agent {
  public:
    virtual ~Agent() = default;
    virtual const char* name() const = 0;
    virtual void begin_episode(int /*episode*/) {}
    // choose() and observe() alternate strictly within an episode; learners
    // cache the abstraction of the pre-step state between the two calls.
    virtual Action choose(const SimState& st, const std::vector<Action>& valid) = 0;
    virtual void observe(const StepResult& /*result*/, const SimState& /*after*/,
                         const std::vector<Action>& /*next_valid*/) {}
};

class RandAgent final : public Agent {
  public:
    RandAgent(const Engine&, std::uint64_t seed) : rng_(seed) {}
    const char* name() const override { return "RAND"; }
    Action choose(const SimState&, const std::vector<Action>& valid) override {
        if (valid.empty()) throw EngineError("choose() with no valid actions");
        return valid[rng_.below(valid.size())];
    }

  private:
    Rng rng_;
};

// Spends credentials: whenever some cached credential has never opened a
// real node and a connect can present it somewhere, pick uniformly among
// those connects; otherwise fall back to a uniform random action.
class CredAgent final : public Agent {
  public:
    CredAgent(const Engine&, std::uint64_t seed) : rng_(seed) {}
    const char* name() const override { return "CRED"; }

    Action choose(const SimState& st, const std::vector<Action>& valid) override {
        if (valid.empty()) throw EngineError("choose() with no valid actions");
        picks_.clear();
        for (std::size_t i = 0; i < valid.size(); ++i)
            if (valid[i].kind == ActionKind::Connect && !st.cred_used_real[valid[i].c])
                picks_.push_back(i);
        if (!picks_.empty()) return valid[picks_[rng_.below(picks_.size())]];
        return valid[rng_.below(valid.size())];
    }

  private:
    Rng rng_;
    std::vector<std::size_t> picks_;
};

class QTabAgent final : public Agent {
  public:
    QTabAgent(const Engine& eng, std::uint64_t seed, AgentConfig cfg = {})
        : eng_(eng), rng_(seed), cfg_(cfg), sig_(eng) {
        qbuf_.resize(std::size_t(sig_.count()));
        present_.resize(std::size_t(sig_.count()));
    }

    const char* name() const override { return "QTAB"; }
    void begin_episode(int episode) override { eps_ = cfg_.epsilon.at(episode); }

    Action choose(const SimState& st, const std::vector<Action>& valid) override {
        if (valid.empty()) throw EngineError("choose() with no valid actions");
        skey_ = state_key(summarize(eng_, st));

        std::size_t pick;
        if (rng_.unit() < eps_) {
            pick = rng_.below(valid.size());
        } else {
            // Argmax with ties broken by lowest canonical key; valid arrives
            // in canonical order, so the first strict maximum wins.
            double best = -1e300;
            std::fill(present_.begin(), present_.end(), 0);
            pick = 0;
            for (std::size_t i = 0; i < valid.size(); ++i) {
                const int s = sig_.of(eng_, valid[i]);
                if (!present_[std::size_t(s)]) {
                    present_[std::size_t(s)] = 1;
                    qbuf_[std::size_t(s)] = q_value(skey_, s);
                }
                if (qbuf_[std::size_t(s)] > best) {
                    best = qbuf_[std::size_t(s)];
                    pick = i;
                }
            }
        }
        last_sig_ = sig_.of(eng_, valid[pick]);
        return valid[pick];
    }

    void observe(const StepResult& r, const SimState& after,
                 const std::vector<Action>& next_valid) override {
        double max_next = 0.0;
        if (!r.win && !next_valid.empty()) {
            const std::uint32_t nkey = state_key(summarize(eng_, after));
            bool first = true;
            std::fill(present_.begin(), present_.end(), 0);
            for (const auto& act : next_valid) {
                const int s = sig_.of(eng_, act);
                if (present_[std::size_t(s)]) continue;
                present_[std::size_t(s)] = 1;
                const double q = q_value(nkey, s);
                if (first || q > max_next) max_next = q;
                first = false;
            }
        }
        double& q = q_[pack(skey_, last_sig_)];
        q += cfg_.alpha * (double(r.delta) + cfg_.gamma * max_next - q);
    }

    std::size_t table_size() const { return q_.size(); }
    double q(std::uint32_t skey, int sig) const { return q_value(skey, sig); }
    const std::unordered_map<std::uint64_t, double>& table() const { return q_; }
    void set_table(std::unordered_map<std::uint64_t, double> t) { q_ = std::move(t); }

  private:
    static std::uint64_t pack(std::uint32_t skey, int sig) {
        return (std::uint64_t(skey) << 16) | std::uint64_t(sig);
    }
    // Unseen entries read as zero.
    double q_value(std::uint32_t skey, int sig) const {
        auto it = q_.find(pack(skey, sig));
        return it == q_.end() ? 0.0 : it->second;
    }

    const Engine& eng_;
    Rng rng_;
    AgentConfig cfg_;
    SignatureSpace sig_;
    std::unordered_map<std::uint64_t, double> q_;
    std::vector<double> qbuf_;
    std::vector<std::uint8_t> present_;
    double eps_ = 0.9;
    std::uint32_t skey_ = 0;
    int last_sig_ = 0;
};

class DqlAgent final : public Agent {
  public:
    DqlAgent(const Engine& eng, std::uint64_t seed, AgentConfig cfg = {})
        : eng_(eng), rng_(seed), cfg_(cfg), sig_(eng) {
        n_ = int(eng.node_count());
        c_ = int(eng.credential_count());
        p_ = int(eng.path_size());
        feat_dim_ = (n_ + 1) + (n_ + 1) + (c_ + 1) + 2 * p_;
        out_dim_ = sig_.count();

        online_ = Mlp<float>(feat_dim_, cfg_.hidden, out_dim_, rng_);
        target_ = online_;
        adam_.lr = float(cfg_.lr);
        adam_.match(online_);
        grads_.match(online_);

        const std::size_t cap = std::size_t(cfg_.replay_capacity);
        feat_s_.assign(cap * std::size_t(feat_dim_), 0.f);
        feat_n_.assign(cap * std::size_t(feat_dim_), 0.f);
        sig_s_.assign(cap, 0);
        reward_.assign(cap, 0.f);
        terminal_.assign(cap, 0);
        mask_words_ = (std::size_t(out_dim_) + 63) / 64;
        mask_n_.assign(cap * mask_words_, 0);

        h_.resize(std::size_t(cfg_.hidden));
        dh_.resize(std::size_t(cfg_.hidden));
        y_.resize(std::size_t(out_dim_));
        dy_.resize(std::size_t(out_dim_));
        cur_feat_.resize(std::size_t(feat_dim_));
    }

    const char* name() const override { return "DQL"; }
    void begin_episode(int episode) override { eps_ = cfg_.epsilon.at(episode); }

    Action choose(const SimState& st, const std::vector<Action>& valid) override {
        if (valid.empty()) throw EngineError("choose() with no valid actions");
        features(st, cur_feat_.data());

        std::size_t pick;
        if (rng_.unit() < eps_) {
            pick = rng_.below(valid.size());
        } else {
            // Same tie-break rule as the tabular learner: first strict
            // maximum in canonical order.
            online_.forward(cur_feat_.data(), h_.data(), y_.data());
            float best = 0.f;
            bool first = true;
            pick = 0;
            for (std::size_t i = 0; i < valid.size(); ++i) {
                const float q = y_[std::size_t(sig_.of(eng_, valid[i]))];
                if (first || q > best) {
                    best = q;
                    pick = i;
                }
                first = false;
            }
        }
        last_sig_ = std::uint16_t(sig_.of(eng_, valid[pick]));
        return valid[pick];
    }

    void observe(const StepResult& r, const SimState& after,
                 const std::vector<Action>& next_valid) override {
        const std::size_t cap = std::size_t(cfg_.replay_capacity);
        const std::size_t slot = head_ % cap;
        std::copy(cur_feat_.begin(), cur_feat_.end(),
                  feat_s_.begin() + std::ptrdiff_t(slot * std::size_t(feat_dim_)));
        features(after, feat_n_.data() + slot * std::size_t(feat_dim_));
        sig_s_[slot] = last_sig_;
        reward_[slot] = float(double(r.delta) * cfg_.reward_scale);
        terminal_[slot] = r.win ? 1 : 0; // step-limit truncation still bootstraps
        std::uint64_t* mask = mask_n_.data() + slot * mask_words_;
        std::fill(mask, mask + mask_words_, 0);
        for (const auto& act : next_valid) {
            const std::size_t s = std::size_t(sig_.of(eng_, act));
            mask[s >> 6] |= std::uint64_t(1) << (s & 63);
        }
        ++head_;

        ++steps_;
        if (steps_ % std::uint64_t(cfg_.train_period) == 0 &&
            head_ >= std::uint64_t(cfg_.batch))
            train_batch();
    }

    std::uint64_t updates() const { return updates_; }
    int feature_dim() const { return feat_dim_; }
    int output_dim() const { return out_dim_; }

    const Mlp<float>& net() const { return online_; }
    void set_net(Mlp<float> m) {
        if (m.in != feat_dim_ || m.out != out_dim_)
            throw EngineError("value net shape does not fit this scenario");
        online_ = std::move(m);
        target_ = online_;
        adam_.match(online_);
        grads_.match(online_);
        h_.resize(std::size_t(online_.hidden)); // width may differ from the config
        dh_.resize(std::size_t(online_.hidden));
    }

    // Exposed for gradient and learning tests.
    void features(const SimState& st, float* out) const {
        std::fill(out, out + feat_dim_, 0.f);
        const StateSummary s = summarize(eng_, st);
        auto clamp = [](int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); };
        int base = 0;
        out[base + clamp(s.owned, n_)] = 1.f;
        base += n_ + 1;
        out[base + clamp(s.disc_not_owned, n_)] = 1.f;
        base += n_ + 1;
        out[base + clamp(s.unused_creds, c_)] = 1.f;
        base += c_ + 1;
        for (int i = 0; i < p_; ++i) {
            const std::uint16_t node = eng_.path_node(std::size_t(i));
            out[base + i] = st.discovered[node] ? 1.f : 0.f;
            out[base + p_ + i] = st.owned[node] ? 1.f : 0.f;
        }
    }

  private:
    void train_batch() {
        const std::size_t size =
            std::min<std::uint64_t>(head_, std::uint64_t(cfg_.replay_capacity));
        grads_.zero();
        for (int b = 0; b < cfg_.batch; ++b) {
            const std::size_t i = rng_.below(size);
            float best_next = 0.f;
            if (!terminal_[i]) {
                target_.forward(feat_n_.data() + i * std::size_t(feat_dim_), h_.data(),
                                y_.data());
                const std::uint64_t* mask = mask_n_.data() + i * mask_words_;
                bool first = true;
                for (int s = 0; s < out_dim_; ++s) {
                    if (!(mask[std::size_t(s) >> 6] & (std::uint64_t(1) << (s & 63))))
                        continue;
                    if (first || y_[std::size_t(s)] > best_next) best_next = y_[std::size_t(s)];
                    first = false;
                }
            }
            const float target = reward_[i] + float(cfg_.gamma) * best_next;

            const float* x = feat_s_.data() + i * std::size_t(feat_dim_);
            online_.forward(x, h_.data(), y_.data());
            std::fill(dy_.begin(), dy_.end(), 0.f);
            dy_[sig_s_[i]] = (y_[sig_s_[i]] - target) / float(cfg_.batch);
            online_.backward(x, h_.data(), dy_.data(), dh_.data(), grads_);
        }
        adam_.step(online_, grads_);
        ++updates_;
        if (updates_ % std::uint64_t(cfg_.target_sync) == 0) target_ = online_;
    }

    const Engine& eng_;
    Rng rng_;
    AgentConfig cfg_;
    SignatureSpace sig_;
    int n_ = 0, c_ = 0, p_ = 0, feat_dim_ = 0, out_dim_ = 0;

    Mlp<float> online_, target_;
    Adam<float> adam_;
    Mlp<float>::Grads grads_;

    std::vector<float> feat_s_, feat_n_, reward_;
    std::vector<std::uint16_t> sig_s_;
    std::vector<std::uint8_t> terminal_;
    std::vector<std::uint64_t> mask_n_;
    std::size_t mask_words_ = 1;
    std::uint64_t head_ = 0, steps_ = 0, updates_ = 0;

    std::vector<float> h_, dh_, y_, dy_, cur_feat_;
    double eps_ = 0.9;
    std::uint16_t last_sig_ = 0;
};

inline std::unique_ptr<Agent> make_agent(AgentKind kind, const Engine& eng, std::uint64_t seed,
                                         const AgentConfig& cfg = {}) {
    switch (kind) {
        case AgentKind::Rand: return std::make_unique<RandAgent>(eng, seed);
        case AgentKind::Cred: return std::make_unique<CredAgent>(eng, seed);
        case AgentKind::QTab: return std::make_unique<QTabAgent>(eng, seed, cfg);
        case AgentKind::Dql: return std::make_unique<DqlAgent>(eng, seed, cfg);
    }
    throw EngineError("unknown agent kind");
}

} // namespace honeysim
