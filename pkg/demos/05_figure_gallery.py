"""Render the three drawing styles for a small gallery of intervals.

Run with:  python3 demos/05_figure_gallery.py
Writes:    gallery_*.svg
"""

from tamari import enumerate_intervals, from_interval, from_tree_pair, interval_to_text
from tamari.render import render_blossoming, render_meandering, render_smooth, save

for index, interval in enumerate(enumerate_intervals(3)):
    text = interval_to_text(interval)
    slug = text.replace("|", "_")
    save(
        render_smooth(interval),
        f"gallery_{index:02d}_smooth_{slug}.svg",
    )
    save(
        render_meandering(from_tree_pair(interval.lower, interval.upper)),
        f"gallery_{index:02d}_meandering_{slug}.svg",
    )
    save(
        render_blossoming(from_interval(interval)),
        f"gallery_{index:02d}_blossoming_{slug}.svg",
    )
    print(f"rendered {text}")

print("wrote 39 SVG files for the 13 intervals of size 3")
