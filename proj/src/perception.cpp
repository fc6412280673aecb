#include "monav/perception.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace monav {

std::string to_string(PerceptionMode m) {
    switch (m) {
        case PerceptionMode::Oracle: return "oracle";
        case PerceptionMode::Cylinder: return "cylinder";
        default: return "natural";
    }
}

PerceptionMode perception_mode_from_string(const std::string& s) {
    if (s == "oracle") return PerceptionMode::Oracle;
    if (s == "cylinder") return PerceptionMode::Cylinder;
    if (s == "natural") return PerceptionMode::Natural;
    throw ConfigError("unknown perception mode: " + s);
}

void DetectorConfig::validate() const {
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob(confidence_threshold) || !prob(knn_accept_fraction) || !prob(miss_rate) ||
        !prob(misclass_rate) || !prob(phantom_rate)) {
        throw ConfigError("detector probabilities must be in [0, 1]");
    }
    if (k_neighbors < 1) throw ConfigError("k_neighbors must be >= 1");
    if (color_noise_sigma < 0 || range_max <= 0 || conf_beta_a <= 0 || conf_beta_b <= 0) {
        throw ConfigError("invalid detector parameters");
    }
}

int ColorPrototypeSet::min_class_count() const {
    std::vector<int> counts(object_categories().size(), 0);
    for (int l : labels) {
        if (l >= 0 && l < static_cast<int>(counts.size())) ++counts[l];
    }
    int m = counts.empty() ? 0 : counts[0];
    for (int c : counts) m = std::min(m, c);
    return m;
}

ColorPrototypeSet default_prototypes(int per_class, double jitter) {
    ColorPrototypeSet set;
    Rng rng(0xc01035ULL);
    const int n_cats = static_cast<int>(object_categories().size());
    for (int cat = 0; cat < n_cats; ++cat) {
        const Rgb base = category_color(cat);
        for (int i = 0; i < per_class; ++i) {
            Rgb s;
            for (int ch = 0; ch < 3; ++ch) {
                s[ch] = static_cast<float>(std::clamp(
                    base[ch] + rng.uniform(-jitter, jitter), 0.0, 1.0));
            }
            set.add(cat, s);
        }
    }
    return set;
}

ColorPrototypeSet load_prototypes_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open prototype file: " + path);
    ColorPrototypeSet set;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string label, r, g, b;
        if (!std::getline(ss, label, ',') || !std::getline(ss, r, ',') ||
            !std::getline(ss, g, ',') || !std::getline(ss, b, ',')) {
            throw DataError("malformed prototype row: " + line);
        }
        if (label == "label") continue; // header
        const int cat = category_index(label);
        if (cat < 0) throw DataError("unknown color label: " + label);
        set.add(cat, {std::stof(r), std::stof(g), std::stof(b)});
    }
    return set;
}

std::optional<int> knn_color(Rgb sample, const ColorPrototypeSet& prototypes,
                             int k, double accept_fraction) {
    const int n = static_cast<int>(prototypes.size());
    if (n == 0) return std::nullopt;
    k = std::min(k, n);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    auto dist2 = [&](int i) {
        const Rgb& p = prototypes.samples[i];
        const double dr = p[0] - sample[0];
        const double dg = p[1] - sample[1];
        const double db = p[2] - sample[2];
        return dr * dr + dg * dg + db * db;
    };
    // stable sort keeps insertion order on distance ties
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist2(a) < dist2(b); });

    std::vector<int> counts(object_categories().size(), 0);
    for (int i = 0; i < k; ++i) ++counts[prototypes.labels[order[i]]];

    int best = -1;
    int best_count = 0;
    bool tied = false;
    for (size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] > best_count) {
            best = static_cast<int>(c);
            best_count = counts[c];
            tied = false;
        } else if (counts[c] == best_count && counts[c] > 0) {
            tied = true;
        }
    }
    const int needed = static_cast<int>(std::ceil(accept_fraction * k));
    if (best < 0 || tied || best_count < needed) return std::nullopt;
    return best;
}

std::vector<Detection> detect(const Observation& obs, const DetectorConfig& cfg,
                              PerceptionMode mode, const ColorPrototypeSet& prototypes,
                              Rng& rng) {
    std::vector<Detection> out;
    for (const VisibleObject& v : obs.visible) {
        if (v.range > cfg.range_max) continue;

        if (mode == PerceptionMode::Oracle) {
            out.push_back({v.category, 1.0, v.range, v.bearing});
            continue;
        }

        int category = v.category;
        if (mode == PerceptionMode::Cylinder) {
            Rgb noisy;
            for (int ch = 0; ch < 3; ++ch) {
                noisy[ch] = static_cast<float>(std::clamp(
                    v.color[ch] + cfg.color_noise_sigma * rng.normal(), 0.0, 1.0));
            }
            auto label = knn_color(noisy, prototypes, cfg.k_neighbors, cfg.knn_accept_fraction);
            if (!label) continue;
            category = *label;
        } else { // Natural
            if (rng.bernoulli(cfg.miss_rate)) continue;
            if (rng.bernoulli(cfg.misclass_rate)) {
                const int n_cats = static_cast<int>(object_categories().size());
                int flipped = static_cast<int>(rng.uniform_int(0, n_cats - 2));
                if (flipped >= category) ++flipped;
                category = flipped;
            }
        }

        const double confidence = rng.beta(cfg.conf_beta_a, cfg.conf_beta_b);
        if (confidence < cfg.confidence_threshold) continue;
        out.push_back({category, confidence, v.range, v.bearing});
    }

    if (cfg.phantom_detections && mode != PerceptionMode::Oracle &&
        rng.bernoulli(cfg.phantom_rate)) {
        const int n_cats = static_cast<int>(object_categories().size());
        Detection phantom;
        phantom.category = static_cast<int>(rng.uniform_int(0, n_cats - 1));
        phantom.confidence = rng.beta(cfg.conf_beta_a, cfg.conf_beta_b);
        phantom.range = rng.uniform(0.5, cfg.range_max);
        phantom.bearing = rng.uniform(-M_PI / 4.0, M_PI / 4.0);
        if (phantom.confidence >= cfg.confidence_threshold) out.push_back(phantom);
    }
    return out;
}

} // namespace monav
