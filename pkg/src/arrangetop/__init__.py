"""Line arrangements, their Milnor fibers, and a 1-formality obstruction."""

__version__ = "0.1.0"
