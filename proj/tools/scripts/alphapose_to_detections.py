#!/usr/bin/env python3
"""Convert per-camera AlphaPose result files into a pedfuse detection file.

AlphaPose (COCO 17-keypoint output) writes one results JSON per camera, an
array of entries like:

    {"image_id": "00000640.png", "category_id": 1,
     "keypoints": [x1, y1, c1, ..., x17, y17, c17],
     "score": 2.97, "box": [x, y, w, h], "idx": 0}

Usage:
    alphapose_to_detections.py --out detections.json 1=cam1.json 2=cam2.json ...

Each positional argument binds a camera id to its AlphaPose results file.
Frame ids are parsed from the digits in image_id, so all cameras must use the
same frame numbering.
"""

import argparse
import json
import re
import sys
from collections import defaultdict


def frame_number(image_id):
    digits = re.findall(r"\d+", str(image_id))
    if not digits:
        raise ValueError(f"cannot parse a frame number from image_id {image_id!r}")
    return int(digits[-1])


def convert_entry(entry, detection_id):
    keypoints = entry["keypoints"]
    if len(keypoints) != 17 * 3:
        raise ValueError(f"expected 51 keypoint values, got {len(keypoints)}")
    x, y, w, h = entry["box"]
    return {
        "detection_id": detection_id,
        "bbox": [x, y, x + w, y + h],
        "keypoints": [
            [keypoints[3 * k], keypoints[3 * k + 1], min(max(keypoints[3 * k + 2], 0.0), 1.0)]
            for k in range(17)
        ],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("sources", nargs="+", metavar="CAMERA=PATH",
                        help="camera id and AlphaPose results file, e.g. 3=cam3/results.json")
    parser.add_argument("--out", required=True, help="output detection file")
    parser.add_argument("--min-score", type=float, default=0.0,
                        help="drop AlphaPose entries with a person score below this")
    args = parser.parse_args()

    frames = defaultdict(dict)  # frame_id -> camera_id -> [detections]
    cameras = []
    for source in args.sources:
        if "=" not in source:
            parser.error(f"expected CAMERA=PATH, got {source!r}")
        camera_text, path = source.split("=", 1)
        camera_id = int(camera_text)
        cameras.append(camera_id)
        with open(path) as handle:
            entries = json.load(handle)
        for entry in entries:
            if entry.get("category_id", 1) != 1:
                continue
            if entry.get("score", 1.0) < args.min_score:
                continue
            frame_id = frame_number(entry["image_id"])
            per_camera = frames[frame_id].setdefault(camera_id, [])
            per_camera.append(convert_entry(entry, len(per_camera)))

    document = {"frames": []}
    for frame_id in sorted(frames):
        document["frames"].append({
            "frame_id": frame_id,
            "cameras": [
                {"camera_id": camera_id, "detections": frames[frame_id].get(camera_id, [])}
                for camera_id in sorted(set(cameras))
            ],
        })

    with open(args.out, "w") as handle:
        json.dump(document, handle)
        handle.write("\n")
    total = sum(len(c["detections"]) for f in document["frames"] for c in f["cameras"])
    print(f"wrote {len(document['frames'])} frame(s), {total} detection(s) to {args.out}")


if __name__ == "__main__":
    sys.exit(main())
