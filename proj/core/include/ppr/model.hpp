#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppr/tensor.hpp"

namespace ppr {

enum class LayerKind { conv, relu, avgpool, fc };

/// One layer of the fixed layer set. Only the fields relevant to `kind`
/// are meaningful; the rest stay at their defaults.
struct LayerSpec {
    LayerKind kind = LayerKind::relu;
    // conv
    int in_channels = 0;
    int out_channels = 0;
    int kernel = 0;
    int stride = 1;
    int padding = 0;
    // avgpool reuses kernel/stride
    // fc
    int in_features = 0;
    int out_features = 0;

    static LayerSpec make_conv(int in_ch, int out_ch, int k, int stride = 1, int pad = 0);
    static LayerSpec make_relu();
    static LayerSpec make_avgpool(int k, int stride);
    static LayerSpec make_fc(int in_features, int out_features);

    bool has_params() const { return kind == LayerKind::conv || kind == LayerKind::fc; }
    size_t weight_count() const;
    size_t bias_count() const;
};

struct LayerParams {
    std::vector<float> weights;
    std::vector<float> bias;
};

/// Architecture descriptor: ordered layer list plus input/output shapes.
/// `input_scale` is a fixed multiplier applied to raw [0,255] pixels before
/// the first layer; it is part of the serialized descriptor.
struct ModelDesc {
    std::string model_id;
    int in_channels = 1;
    int in_height = 32;
    int in_width = 32;
    double input_scale = 1.0;
    int embedding_dim = 0;
    std::vector<LayerSpec> layers;
};

struct Shape3 {
    int c = 0, h = 0, w = 0;
    size_t count() const { return static_cast<size_t>(c) * h * w; }
};

/// Toy embedding model: descriptor plus per-layer weight arrays
/// (empty entries for layers without parameters).
struct EmbeddingModel {
    ModelDesc desc;
    std::vector<LayerParams> params;

    Shape3 input_shape() const { return {desc.in_channels, desc.in_height, desc.in_width}; }

    /// Throws ConfigError if layer shapes do not chain or weight array
    /// lengths disagree with the descriptor.
    void validate() const;
};

/// Output shape of `layer` applied to input shape `in`. Throws ConfigError
/// when the layer cannot consume the shape.
Shape3 layer_output_shape(const LayerSpec& layer, const Shape3& in, size_t layer_index);

/// Shape of the final activation; its count must equal embedding_dim.
Shape3 model_output_shape(const ModelDesc& desc);

/// Architecture presets. "small-A" is 2 conv + 1 FC, "small-B" is 3 conv +
/// 1 FC with different widths, so surrogate/victim pairs genuinely differ.
ModelDesc preset_descriptor(const std::string& preset, int in_channels, int in_height,
                            int in_width, const std::string& model_id);

/// Seeded He-style weight init; biases start at zero.
void init_params(EmbeddingModel& model, uint64_t seed);

/// Descriptor <-> JSON text (the serialized form embedded in model files).
std::string desc_to_json(const ModelDesc& desc);
ModelDesc desc_from_json(const std::string& text);

} // namespace ppr
