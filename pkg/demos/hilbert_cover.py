"""Render the Hilbert curve automaton as boxes and check it fills the square."""
import sys

from regreal import attractor_boxes, load_corpus

h = load_corpus("fig4_hilbert")
k = int(sys.argv[1]) if len(sys.argv) > 1 else 4

cover = attractor_boxes(h, k)
cells = cover.project([1, 2])
side = 2**k
print(f"{len(cover)} boxes, {len(cells)} of {side * side} cells of the square hit")

# visiting order of the 4x4 grid; t is the first index of each box
small = attractor_boxes(h, 2)
grid = [[""] * 4 for _ in range(4)]
for t, x, y in small.boxes:
    grid[3 - y][x] = f"{t:2d}"
print("\n".join(" ".join(row) for row in grid))

# rows for an external plotting tool
with open(f"hilbert_k{k}.csv", "w") as fh:
    fh.write(cover.to_csv())
print(f"wrote hilbert_k{k}.csv")
