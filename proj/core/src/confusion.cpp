#include "mism/confusion.hpp"

#include "mism/error.hpp"

namespace mism {

std::string to_string(const ConfusionMatrix& m) {
  return "tp=" + std::to_string(m.tp) + " fp=" + std::to_string(m.fp) +
         " tn=" + std::to_string(m.tn) + " fn=" + std::to_string(m.fn);
}

ConfusionMatrix confusion_matrix(const BinaryMask& gt, const BinaryMask& pred) {
  if (!gt.same_shape(pred)) {
    throw Error(ErrorKind::DimensionMismatch, "ground truth is " + gt.shape_string() +
                                                  " but prediction is " + pred.shape_string());
  }
  const auto g = gt.labels();
  const auto p = pred.labels();

  // Three running sums instead of a four-way branch; the remaining cells
  // follow from the marginals.
  std::uint64_t both = 0;
  std::uint64_t gt_fg = 0;
  std::uint64_t pred_fg = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto a = static_cast<std::uint64_t>(g[i]);
    const auto b = static_cast<std::uint64_t>(p[i]);
    both += a & b;
    gt_fg += a;
    pred_fg += b;
  }

  ConfusionMatrix m;
  m.tp = both;
  m.fn = gt_fg - both;
  m.fp = pred_fg - both;
  m.tn = g.size() - gt_fg - m.fp;
  return m;
}

}  // namespace mism
