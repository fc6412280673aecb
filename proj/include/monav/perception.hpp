#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monav/rng.hpp"
#include "monav/scene.hpp"
#include "monav/simulator.hpp"

namespace monav {

enum class PerceptionMode { Oracle, Cylinder, Natural };

std::string to_string(PerceptionMode m);
PerceptionMode perception_mode_from_string(const std::string& s);

struct DetectorConfig {
    double confidence_threshold = 0.95;
    int k_neighbors = 10;
    double knn_accept_fraction = 0.8;
    double color_noise_sigma = 0.05; // per RGB channel
    double miss_rate = 0.05;         // natural mode
    double misclass_rate = 0.05;     // natural mode
    double range_max = 5.0;
    // Confidence score distribution for true positives; the task only fixes
    // the 0.95 gate, so the shape is configurable.
    double conf_beta_a = 18.0;
    double conf_beta_b = 0.5;
    bool phantom_detections = false; // off by default; FasterRCNN false
                                     // positives are not characterized
    double phantom_rate = 0.0;

    void validate() const;
};

struct Detection {
    int category = -1;
    double confidence = 0.0;
    double range = 0.0;
    double bearing = 0.0;
};

// Labeled RGB samples; every class needs at least k samples.
struct ColorPrototypeSet {
    std::vector<int> labels;
    std::vector<Rgb> samples;

    size_t size() const { return labels.size(); }
    void add(int label, Rgb rgb) {
        labels.push_back(label);
        samples.push_back(rgb);
    }
    int min_class_count() const;
};

// Deterministic per-category prototype cloud around the nominal colors.
ColorPrototypeSet default_prototypes(int per_class = 12, double jitter = 0.04);

// CSV rows: label,r,g,b (header optional). Unknown labels are an error.
ColorPrototypeSet load_prototypes_csv(const std::string& path);

// k nearest prototypes under Euclidean RGB distance; modal label wins iff
// its count reaches ceil(accept_fraction * k). Ties between prototype
// distances break by insertion order; a tied mode rejects.
std::optional<int> knn_color(Rgb sample, const ColorPrototypeSet& prototypes,
                             int k, double accept_fraction);

// Degrades the ground-truth visible-object list into detections.
std::vector<Detection> detect(const Observation& obs, const DetectorConfig& cfg,
                              PerceptionMode mode, const ColorPrototypeSet& prototypes,
                              Rng& rng);

} // namespace monav
