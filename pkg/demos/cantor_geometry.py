"""Box counts, porosity and residuals of the middle-thirds Cantor set."""
from regreal import attractor_boxes, box_measure_estimate, kernel_residuals, load_corpus
from regreal import porosity_witness

c = load_corpus("cantor")

for k in range(7):
    print(k, len(attractor_boxes(c, k)), box_measure_estimate(c, k))

w = porosity_witness(c)
print("gap at depth", w.k, "interval", w.interval, "porosity constant", w.constant)

print("residual classes:", len(kernel_residuals(c)))

# plot-ready rows
print(attractor_boxes(c, 3).to_csv())
