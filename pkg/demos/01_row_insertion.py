# Row insertion step by step.
#
# A word is read one letter at a time. Each letter lands at the end of the
# first row if it is at least as large as everything there; otherwise it
# bumps the leftmost strictly larger entry, which is then inserted into the
# next row, and so on. The tuple of row lengths after the whole word has
# been inserted is the shape of the word.

from schurweyl.rsk import bump_stream, bump_streams, rsk, sh_rsk

word = (2, 3, 2, 1, 2, 2)
print(f"word: {word}")
print()

# Watch the insertion tableau grow one prefix at a time.

for i in range(1, len(word) + 1):
    pair = rsk(word[:i])
    print(f"after {word[:i]}:")
    for row in pair.p:
        print("   ", " ".join(str(x) for x in row))
print()

pair = rsk(word)
print(f"shape:            {pair.shape}")
print(f"recording rows:   {pair.q}")

# Every time a letter is bumped from row 1 it carries one unit of "overflow"
# into the lower rows. Collecting the bumped letters in bump order gives a
# new, shorter word whose shape is exactly the lower rows of the original.

print()
for k, stream in enumerate(bump_streams(word), start=1):
    print(f"letters bumped out of row {k}: {stream}"
          f"   shape {sh_rsk(stream)} = rows {k + 1}.. of {pair.shape}")

# The first row alone is the longest weakly increasing subsequence; the
# overflow words explain where everything else went.

assert sh_rsk(bump_stream(word, 1)) == pair.shape[1:]
print()
print("lower-row identity holds for the worked example")
