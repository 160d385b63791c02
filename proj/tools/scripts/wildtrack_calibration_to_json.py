#!/usr/bin/env python3
"""Convert WILDTRACK OpenCV calibration XMLs into a pedfuse calibration file.

WILDTRACK provides per-camera intrinsic XMLs (camera_matrix +
distortion_coefficients) and extrinsic XMLs (rvec as a Rodrigues vector,
tvec). This script composes them into the JSON array the pipeline loads.

The pipeline expects undistorted inputs: by default the distortion
coefficients are copied through, so the loader will reject cameras with
nonzero distortion. Pass --assume-undistorted once your frames (and hence
your 2D detections) have been undistorted with these exact coefficients.

Usage:
    wildtrack_calibration_to_json.py \
        --intrinsics calibrations/intrinsic_zero/intr_*.xml \
        --extrinsics calibrations/extrinsic/extr_*.xml \
        --t-scale 0.01 --out calibration.json
"""

import argparse
import json
import math
import re
import sys
import xml.etree.ElementTree as ET


def read_matrix(node):
    rows = int(node.find("rows").text)
    cols = int(node.find("cols").text)
    data = [float(v) for v in node.find("data").text.split()]
    if len(data) != rows * cols:
        raise ValueError("matrix data does not match its declared shape")
    return rows, cols, data


def read_opencv_xml(path, names):
    root = ET.parse(path).getroot()
    found = {}
    for name in names:
        node = root.find(name)
        if node is not None:
            found[name] = read_matrix(node)
    return found


def rodrigues(rvec):
    theta = math.sqrt(sum(v * v for v in rvec))
    if theta < 1e-12:
        return [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    kx, ky, kz = (v / theta for v in rvec)
    c, s = math.cos(theta), math.sin(theta)
    one_c = 1.0 - c
    return [
        [c + kx * kx * one_c, kx * ky * one_c - kz * s, kx * kz * one_c + ky * s],
        [ky * kx * one_c + kz * s, c + ky * ky * one_c, ky * kz * one_c - kx * s],
        [kz * kx * one_c - ky * s, kz * ky * one_c + kx * s, c + kz * kz * one_c],
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--intrinsics", nargs="+", required=True,
                        help="intrinsic XML files, one per camera, sorted order = camera order")
    parser.add_argument("--extrinsics", nargs="+", required=True,
                        help="extrinsic XML files in the same camera order")
    parser.add_argument("--t-scale", type=float, default=0.01,
                        help="scale applied to tvec to obtain meters (default 0.01, cm -> m)")
    parser.add_argument("--assume-undistorted", action="store_true",
                        help="omit distortion coefficients from the output")
    parser.add_argument("--out", required=True)
    args = parser.parse_args()

    if len(args.intrinsics) != len(args.extrinsics):
        parser.error("--intrinsics and --extrinsics must list the same number of files")

    cameras = []
    for index, (intr_path, extr_path) in enumerate(
            zip(sorted(args.intrinsics), sorted(args.extrinsics))):
        intr = read_opencv_xml(intr_path, ["camera_matrix", "distortion_coefficients"])
        extr = read_opencv_xml(extr_path, ["rvec", "tvec"])
        if "camera_matrix" not in intr:
            raise SystemExit(f"{intr_path}: no camera_matrix node")
        if "rvec" not in extr or "tvec" not in extr:
            raise SystemExit(f"{extr_path}: missing rvec/tvec nodes")

        record = {
            "camera_id": index + 1,
            "K": intr["camera_matrix"][2],
            "R": [v for row in rodrigues(extr["rvec"][2]) for v in row],
            "t": [v * args.t_scale for v in extr["tvec"][2]],
        }
        if not args.assume_undistorted and "distortion_coefficients" in intr:
            record["distortion"] = intr["distortion_coefficients"][2]
        cameras.append(record)

    with open(args.out, "w") as handle:
        json.dump(cameras, handle, indent=2)
        handle.write("\n")
    print(f"wrote {len(cameras)} camera(s) to {args.out}")


if __name__ == "__main__":
    sys.exit(main())
