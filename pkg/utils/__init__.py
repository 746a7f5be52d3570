# utils package: reporting helpers
