# The geometric picture of row insertion, for words with distinct letters.
#
# Plot the word as points (i, w_i). Sweep a light from the lower left: the
# first shadow line hugs the points that start some weakly increasing
# subsequence record. The number of lines is the first row of the shape.
# The corners between consecutive points of a line, read left to right
# across all lines, spell out exactly the letters bumped out of row 1.

from schurweyl.rsk import bump_stream, sh_rsk
from schurweyl.viennot import build_diagram, iterated_shape, render_text, skeleton_word

word = (4, 2, 6, 1, 5, 7, 3)
diagram = build_diagram(word)
print(f"word: {word}")
print()
print(render_text(diagram))
print()
print("o = letters, x = corners (skeleton)")
print()

print(f"lines:            {len(diagram.lines)}")
print(f"first row:        {sh_rsk(word)[0]}")
print(f"skeleton word:    {skeleton_word(diagram)}")
print(f"bumped from row 1: {bump_stream(word, 1)}")

# Re-running the construction on the skeleton gives the next row, and so
# on down: the geometry reproduces the entire shape without ever building
# a tableau.

print()
print(f"shape by iterated shadow lines: {iterated_shape(word)}")
print(f"shape by row insertion:         {sh_rsk(word)}")

# The skeleton of the skeleton:

second = skeleton_word(diagram)
if second:
    print()
    print("shadow lines of the skeleton word:")
    print(render_text(build_diagram(second)))
