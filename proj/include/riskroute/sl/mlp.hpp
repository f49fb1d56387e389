#pragma once

#include <cstdint>

#include "riskroute/common/random.hpp"
#include "riskroute/sl/classifier.hpp"

namespace riskroute::sl {

enum class Activation { relu, tanh };

/// Fully connected hidden layers and one sigmoid output unit.
struct MlpNetwork {
  Activation activation = Activation::relu;
  std::vector<Eigen::MatrixXd> weights;  // weights[l] is (fan_in x fan_out)
  std::vector<Eigen::VectorXd> biases;

  std::size_t parameter_count() const;
  Eigen::VectorXd flatten() const;
  void unflatten(const Eigen::VectorXd& flat);
  /// Positive-class probability per row.
  Eigen::VectorXd forward(const Eigen::MatrixXd& x) const;
};

/// Glorot-uniform weights and biases.
MlpNetwork init_network(std::size_t inputs, const std::vector<int>& hidden, Activation activation, Rng& rng);

/// Mean binary cross-entropy plus alpha / (2n) * sum of squared weights (biases
/// unpenalized). Fills `gradient` (same shapes as `net`) when non-null.
double loss_and_gradient(const MlpNetwork& net, const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         double alpha, MlpNetwork* gradient);

struct MlpParams {
  std::vector<int> hidden_layer_sizes{100};
  Activation activation = Activation::relu;
  std::string solver = "adam";  // adam | sgd
  double alpha = 1e-4;
  std::string learning_rate = "constant";  // constant | adaptive
  double learning_rate_init = 1e-3;
  int batch_size = 200;  // clipped to n
  int max_iter = 200;    // epochs
  double tol = 1e-4;
  int n_iter_no_change = 10;
  double momentum = 0.9;

  static MlpParams from(const Params& params);
  Params to_params() const;
};

/// Inputs are standardized with training mean / std stored in the model.
class MlpModel final : public Classifier {
 public:
  MlpModel(Eigen::VectorXd input_mean, Eigen::VectorXd input_scale, MlpNetwork network, int epochs);

  ModelKind kind() const override { return ModelKind::MLP; }
  using Classifier::predict_positive;
  Eigen::VectorXd predict_positive(const Eigen::MatrixXd& x) const override;
  nlohmann::json to_json() const override;
  static std::shared_ptr<const MlpModel> from_json(const nlohmann::json& j);

  const MlpNetwork& network() const { return network_; }
  int epochs() const { return epochs_; }

 private:
  Eigen::VectorXd input_mean_;
  Eigen::VectorXd input_scale_;
  MlpNetwork network_;
  int epochs_;
};

std::shared_ptr<const MlpModel> fit_mlp(const Dataset& data, const MlpParams& params, std::uint64_t seed);

}  // namespace riskroute::sl
