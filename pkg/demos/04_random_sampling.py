"""Exact uniform sampling: frequencies at a small size, one large picture.

Run with:  python3 demos/04_random_sampling.py
Writes:    demo_random_meandering.svg
"""

from collections import Counter

from tamari import RandomSource, interval_to_text, sample_blossoming, sample_interval
from tamari.blossoming import to_meandering
from tamari.counting import Family, count
from tamari.render import render_meandering, save

# At size 3 there are 13 intervals; a uniform sampler should hit each
# about 1/13 of the time.
rng = RandomSource(seed=20240831)
draws = 13000
frequencies = Counter(
    interval_to_text(sample_interval(3, rng)) for _ in range(draws)
)
print(f"{draws} draws at size 3 over {count(Family.GENERAL, 3)} intervals:")
for text, hits in sorted(frequencies.items()):
    print(f"  {text:16} {hits:5}  ({hits / draws:.4f}, target {1 / 13:.4f})")

# The same machinery scales to large sizes; the meandering drawing of a
# uniform blossoming tree makes a nice picture.
big = sample_blossoming(400, rng.split())
figure = render_meandering(to_meandering(big))
save(figure, "demo_random_meandering.svg")
print("\nwrote demo_random_meandering.svg "
      f"({figure.width} x {figure.height} user units)")
