// GKZ, massive GKZ and Hurwitz vectors of triangulations.

#ifndef HURWITZ_GKZ_HPP
#define HURWITZ_GKZ_HPP

#include "hurwitz/triangulation.hpp"

#include <string_view>
#include <unordered_map>
#include <vector>

namespace hurwitz {

enum class WeightKind { Eta, Gkz, Massive, Hurwitz, Nu };

std::string_view to_string(WeightKind kind);

/// Integer vector indexed by the points of a configuration.
struct WeightVector {
    IntVector values;
    WeightKind kind = WeightKind::Gkz;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Precomputed face structure of conv(A) used to decide massiveness.
/// Immutable after construction and safe to share between threads.
class WeightCalculator {
public:
    explicit WeightCalculator(const PointConfiguration& config);

    const PointConfiguration& config() const { return config_; }
    std::size_t dim() const { return config_.dim(); }
    /// Point sets (bitmasks) of the k-faces of conv(A).
    const std::vector<Cell>& face_points(std::size_t k) const { return face_points_.at(k); }

    /// A k-simplex (k = |simplex| - 1) is massive when k = n or it lies in a
    /// k-face of conv(A).
    bool is_massive(Cell simplex) const;

    /// eta_{T,k}: per point, the volumes of the massive k-simplices of T
    /// containing it.
    WeightVector eta(const Triangulation& t, std::size_t k) const;
    WeightVector gkz(const Triangulation& t) const;
    /// sum_k (-1)^{n-k} eta_{T,k}
    WeightVector massive_gkz(const Triangulation& t) const;
    /// n eta_{T,n} - eta_{T,n-1}
    WeightVector hurwitz(const Triangulation& t) const;

private:
    PointConfiguration config_;
    std::vector<std::vector<Cell>> face_points_;
    std::unordered_map<Cell, Int> massive_volume_;  // proper massive simplices
};

bool is_massive(const PointConfiguration& config, Cell simplex);
WeightVector eta_k(const PointConfiguration& config, const Triangulation& t, std::size_t k);
WeightVector gkz_vector(const PointConfiguration& config, const Triangulation& t);
WeightVector massive_gkz(const PointConfiguration& config, const Triangulation& t);
WeightVector hurwitz_vector(const PointConfiguration& config, const Triangulation& t);

}  // namespace hurwitz

#endif
