#pragma once

#include "ddrom/closure.hpp"
#include "ddrom/scaler.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ddrom::nn {

enum class Activation { softplus, relu, leaky_relu };
const char* to_string(Activation act);
Activation activation_from_string(const std::string& name);

/// Samples are columns. Dense models read X; the LSTM reads `seq`, oldest
/// step first, every entry features x samples.
struct Batch {
    Eigen::MatrixXd X;
    std::vector<Eigen::MatrixXd> seq;
    Eigen::MatrixXd Y;

    int samples() const;
};

/// Parameters live in one flat vector so the optimizer and the gradient check
/// see every architecture the same way.
class Network {
public:
    virtual ~Network() = default;

    virtual std::string kind() const = 0;
    virtual int input_dim() const = 0;
    virtual int output_dim() const = 0;
    virtual bool sequential() const { return false; }
    virtual int window() const { return 1; }

    /// Output (outputs x samples) in normalized units.
    virtual Eigen::MatrixXd forward(const Batch& batch) const = 0;
    /// Adds d/dtheta of sum(dout .* forward(batch)) to grad.
    virtual void backward(const Batch& batch, const Eigen::MatrixXd& dout, Eigen::Ref<Eigen::VectorXd> grad) const = 0;
    virtual nlohmann::json architecture() const = 0;
    virtual std::unique_ptr<Network> clone() const = 0;

    Eigen::VectorXd& params() { return theta_; }
    const Eigen::VectorXd& params() const { return theta_; }
    int n_params() const { return static_cast<int>(theta_.size()); }
    /// 1 on weights, 0 on biases; the L2 penalty only sees weights.
    const Eigen::VectorXd& weight_mask() const { return mask_; }

    /// Glorot-uniform weights, zero biases.
    void initialize(std::uint64_t seed);

    Scaler input_scaler;
    Scaler output_scaler;

    /// Raw-unit prediction: scales inputs, runs forward, unscales outputs.
    Eigen::MatrixXd predict(const Batch& raw) const;
    Batch normalize(const Batch& raw) const;

    struct Block {
        Eigen::Index offset;
        int rows;
        int cols;
        bool weight;
    };
    const std::vector<Block>& blocks() const { return blocks_; }

protected:
    /// Appends a rows x cols parameter block and returns its offset.
    Eigen::Index add_block(int rows, int cols, bool weight);
    void finalize_blocks();
    Eigen::Map<const Eigen::MatrixXd> block(Eigen::Index offset, int rows, int cols) const {
        return {theta_.data() + offset, rows, cols};
    }

    std::vector<Block> blocks_;
    Eigen::VectorXd theta_;
    Eigen::VectorXd mask_;
};

/// Fully connected network, hidden activations, linear output layer.
class MLP : public Network {
public:
    MLP(std::vector<int> widths, Activation act);

    std::string kind() const override { return "mlp"; }
    int input_dim() const override { return widths_.front(); }
    int output_dim() const override { return widths_.back(); }
    Eigen::MatrixXd forward(const Batch& batch) const override;
    void backward(const Batch& batch, const Eigen::MatrixXd& dout, Eigen::Ref<Eigen::VectorXd> grad) const override;
    nlohmann::json architecture() const override;
    std::unique_ptr<Network> clone() const override { return std::make_unique<MLP>(*this); }

    const std::vector<int>& widths() const { return widths_; }
    Activation activation() const { return act_; }

    /// Forward pass on X (inputs x samples) with parameters starting at theta.
    Eigen::MatrixXd run(const double* theta, const Eigen::MatrixXd& X) const;
    /// Backward pass; accumulates into grad (same layout as theta) and returns dX.
    Eigen::MatrixXd run_backward(const double* theta, const Eigen::MatrixXd& X, const Eigen::MatrixXd& dout,
                                 double* grad) const;

private:
    std::vector<int> widths_;
    Activation act_;
};

/// Stacked LSTM layers with a linear readout of the last hidden state.
class LSTM : public Network {
public:
    LSTM(int input, std::vector<int> hidden, int output, int n_seq);

    std::string kind() const override { return "lstm"; }
    int input_dim() const override { return input_; }
    int output_dim() const override { return output_; }
    bool sequential() const override { return true; }
    int window() const override { return n_seq_; }
    Eigen::MatrixXd forward(const Batch& batch) const override;
    void backward(const Batch& batch, const Eigen::MatrixXd& dout, Eigen::Ref<Eigen::VectorXd> grad) const override;
    nlohmann::json architecture() const override;
    std::unique_ptr<Network> clone() const override { return std::make_unique<LSTM>(*this); }

private:
    struct Cache;
    void run(const Batch& batch, Cache& cache) const;

    int input_;
    std::vector<int> hidden_;
    int output_;
    int n_seq_;
    std::vector<Eigen::Index> w_off_, u_off_, b_off_;
    Eigen::Index wr_off_ = 0, br_off_ = 0;
};

/// Inputs (nu, t). NN1 maps nu to (p1, p2); the features are
/// sin/cos(N1 p1 k t + N2 p2), k = 1..n; NN2 maps the features to the output.
class SinNN : public Network {
public:
    SinNN(std::vector<int> nn1_hidden, std::vector<int> nn2_hidden, int output, double n1 = 50.0, double n2 = 1000.0,
          int harmonics = 20, Activation act = Activation::leaky_relu);

    std::string kind() const override { return "sinnn"; }
    int input_dim() const override { return 2; }
    int output_dim() const override { return nn2_.widths().back(); }
    Eigen::MatrixXd forward(const Batch& batch) const override;
    void backward(const Batch& batch, const Eigen::MatrixXd& dout, Eigen::Ref<Eigen::VectorXd> grad) const override;
    nlohmann::json architecture() const override;
    std::unique_ptr<Network> clone() const override { return std::make_unique<SinNN>(*this); }

    /// (p1, p2) per sample for the nu row of X.
    Eigen::MatrixXd frequency_phase(const Eigen::MatrixXd& X) const;
    Eigen::MatrixXd features(const Eigen::MatrixXd& p, const Eigen::RowVectorXd& t) const;
    double n1() const { return n1_; }
    double n2() const { return n2_; }

private:
    MLP nn1_;
    MLP nn2_;
    double n1_, n2_;
    int harmonics_;
    Eigen::Index nn2_off_ = 0;
};

/// Rebuilds an untrained network from architecture() output.
std::unique_ptr<Network> make_network(const nlohmann::json& architecture);

struct LossTerms {
    double total = 0.0;
    double mse = 0.0;
    double penalty = 0.0;
};

/// Mean of squared errors over all output entries plus omega * |weights|^2,
/// evaluated on a normalized batch.
LossTerms loss(const Network& net, const Batch& batch, double omega);
/// Gradient of loss() with respect to params().
Eigen::VectorXd grad(const Network& net, const Batch& batch, double omega, LossTerms* terms = nullptr);

struct GradientCheck {
    double max_rel_error = 0.0;
    int checked = 0;
};
/// Central differences on `components` random parameters. The relative error
/// denominator is floored at `floor` so vanishing components compare absolutely.
GradientCheck check_gradient(Network& net, const Batch& batch, double omega, int components, std::uint64_t seed,
                             double step = 1e-6, double floor = 1e-4);

struct TrainConfig {
    double lr = 1e-3;
    double weight_decay = 1e-6;
    int epochs = 6000;
    int step_size = 0;  ///< multiply lr by gamma every step_size epochs; 0 disables
    double gamma = 0.2;
    std::uint64_t seed = 0;
    bool standardize_inputs = false;
    bool standardize_outputs = false;

    void validate() const;
    nlohmann::json to_json() const;
    static TrainConfig from_json(const nlohmann::json& j);
};

struct TrainResult {
    std::vector<double> loss;  ///< total loss per epoch, before the update
    std::vector<double> lr;
    double final_mse = 0.0;
};

/// Seeds the weights, fits the scalers if requested and runs full-batch Adam
/// on the raw-unit batch. Throws TrainingError on a non-finite loss.
TrainResult train(Network& net, const Batch& raw, const TrainConfig& config);
void write_loss_csv(const TrainResult& result, const std::string& path);

struct Ensemble {
    std::vector<std::unique_ptr<Network>> members;
    std::vector<std::uint64_t> seeds;

    int size() const { return static_cast<int>(members.size()); }
};

Ensemble train_ensemble(const Network& prototype, const Batch& raw, TrainConfig config,
                        const std::vector<std::uint64_t>& seeds, std::vector<TrainResult>* results = nullptr);

struct Band {
    Eigen::MatrixXd mean;
    Eigen::MatrixXd lower;
    Eigen::MatrixXd upper;
};

/// mean +- 3 sigma with the population standard deviation. `literal` divides
/// the bounds by the member count instead.
Band ensemble_band(const std::vector<Eigen::MatrixXd>& predictions, bool literal = false);
Band ensemble_predict(const Ensemble& ensemble, const Batch& raw, bool literal = false);

/// JSON header line (architecture, scalers, extra metadata) then the raw
/// little-endian parameter doubles.
void save_model(const Network& net, const std::string& path, const nlohmann::json& meta = {});
std::unique_ptr<Network> load_model(const std::string& path, nlohmann::json* meta = nullptr);

/// Dense input matrix (features x samples) from dataset records.
Eigen::MatrixXd dense_inputs(const CorrectionDataset& ds, const InputSelection& sel);
/// Windows of n_seq consecutive records within each viscosity block; early
/// windows repeat the first record of the block.
std::vector<Eigen::MatrixXd> sequence_inputs(const CorrectionDataset& ds, const InputSelection& sel, int n_seq);

/// Closure backed by one network or the ensemble mean. LSTM closures build
/// their window from the solver history followed by the predictor state,
/// padding with the initial state.
ClosureFn network_closure(std::shared_ptr<const Ensemble> ensemble, const InputSelection& sel);

}  // namespace ddrom::nn
