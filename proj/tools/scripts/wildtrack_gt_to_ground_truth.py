#!/usr/bin/env python3
"""Convert WILDTRACK annotation files into a pedfuse ground-truth file.

WILDTRACK ships one JSON per annotated frame under annotations_positions/,
each an array of {"personID": ..., "positionID": ..., "views": [...]}.
A positionID indexes a 480 x 1440 grid with 2.5 cm pitch anchored at
(-3.0, -9.0), so

    X = -3.0 + 0.025 * (positionID % 480)
    Y = -9.0 + 0.025 * (positionID // 480)

covering the 12 x 36 m area of interest. Frame ids are parsed from the
annotation filenames.

Usage:
    wildtrack_gt_to_ground_truth.py --annotations WILDTRACK/annotations_positions \
        --out ground_truth.json
"""

import argparse
import json
import os
import re
import sys

GRID_COLUMNS = 480
GRID_ORIGIN_X = -3.0
GRID_ORIGIN_Y = -9.0
GRID_STEP = 0.025


def position_to_xy(position_id):
    return (GRID_ORIGIN_X + GRID_STEP * (position_id % GRID_COLUMNS),
            GRID_ORIGIN_Y + GRID_STEP * (position_id // GRID_COLUMNS))


def main():
    parser = argparse.ArgumentParser(description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--annotations", required=True,
                        help="directory with per-frame WILDTRACK annotation JSON files")
    parser.add_argument("--out", required=True, help="output ground-truth file")
    args = parser.parse_args()

    document = {"frames": []}
    names = sorted(n for n in os.listdir(args.annotations) if n.endswith(".json"))
    if not names:
        parser.error(f"no .json files under {args.annotations}")
    for name in names:
        digits = re.findall(r"\d+", name)
        if not digits:
            continue
        frame_id = int(digits[-1])
        with open(os.path.join(args.annotations, name)) as handle:
            entries = json.load(handle)
        annotations = []
        for entry in entries:
            x, y = position_to_xy(int(entry["positionID"]))
            annotations.append({"person_id": int(entry["personID"]), "X": x, "Y": y})
        document["frames"].append({"frame_id": frame_id, "annotations": annotations})

    with open(args.out, "w") as handle:
        json.dump(document, handle)
        handle.write("\n")
    total = sum(len(f["annotations"]) for f in document["frames"])
    print(f"wrote {len(document['frames'])} frame(s), {total} annotation(s) to {args.out}")


if __name__ == "__main__":
    sys.exit(main())
